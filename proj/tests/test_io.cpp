#include <doctest.h>

#include <sstream>
#include <string>

#include "chainprof/certificate.hpp"
#include "chainprof/io.hpp"
#include "chainprof/profile.hpp"
#include "fixtures.hpp"

using chainprof::ChainProfile;
using chainprof::CompressedPoset;
using chainprof::ParseError;
using chainprof::Poset;

TEST_CASE("poset text round trip") {
  Poset pendant = fixtures::pendant_witness();
  std::ostringstream out;
  chainprof::write_poset(out, pendant);
  std::istringstream in(out.str());
  Poset back = chainprof::read_poset(in);
  CHECK(back.size() == pendant.size());
  CHECK(back.cover_edges() == pendant.cover_edges());
}

TEST_CASE("read_poset tolerates blank lines") {
  std::istringstream in("poset v1\n\nelements 2\n\ncover 0 1\n\n");
  Poset p = chainprof::read_poset(in);
  CHECK(p.size() == 2);
  CHECK(p.cover_edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("read_poset reports the offending line") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      chainprof::read_poset(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("wrong header\n") == 1);
  CHECK(line_of("poset v1\nelements two\n") == 2);
  CHECK(line_of("poset v1\nelements 3\ncover 0 1\nedge 1 2\n") == 4);
  CHECK(line_of("poset v1\nelements 3\ncover 0 3\n") == 3);
  CHECK(line_of("poset v1\nelements 2\ncover 0 1 9\n") == 3);
}

TEST_CASE("certificate text round trip") {
  CompressedPoset cert = chainprof::compress(fixtures::pendant_witness(), {0, 1, 2, 3, 4});
  std::ostringstream out;
  chainprof::write_certificate(out, cert);
  std::istringstream in(out.str());
  CHECK(chainprof::read_certificate(in) == cert);
}

TEST_CASE("read_certificate parses the documented layout") {
  std::istringstream in(
      "cert v1\n"
      "m 1000000000\n"
      "mprime 1 1000000000\n"
      "x 0\n");
  CompressedPoset cert = chainprof::read_certificate(in);
  CHECK(cert.m == 1000000000);
  CHECK(cert.mprime_positions == std::vector<std::uint64_t>{1, 1000000000});
  CHECK(cert.x_count == 0);
  CHECK(cert.light_edges.empty());
  CHECK(chainprof::verify(cert, ChainProfile{1000000000}, 1000000000));
}

TEST_CASE("read_certificate reports the offending line") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      chainprof::read_certificate(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("poset v1\n") == 1);
  CHECK(line_of("cert v1\nm\n") == 2);
  CHECK(line_of("cert v1\nm 5\nmprime\n") == 3);
  CHECK(line_of("cert v1\nm 5\nmprime 1 5\nx zero\n") == 4);
  CHECK(line_of("cert v1\nm 5\nmprime 1 5\nx 1\nedge Q1 X0\n") == 5);
  CHECK(line_of("cert v1\nm 5\nmprime 1 5\nx 1\nedge M1 X0\nedge M1\n") == 6);
}

TEST_CASE("parse_profile_arg") {
  CHECK(chainprof::parse_profile_arg("2,3,3,5,5") == ChainProfile{2, 3, 3, 5, 5});
  CHECK(chainprof::parse_profile_arg("5x2,3x2,2") == ChainProfile{2, 3, 3, 5, 5});
  CHECK(chainprof::parse_profile_arg("7") == ChainProfile{7});
  CHECK_THROWS_AS(chainprof::parse_profile_arg(""), chainprof::InvalidProfileError);
  CHECK_THROWS_AS(chainprof::parse_profile_arg("2,,3"), chainprof::InvalidProfileError);
  CHECK_THROWS_AS(chainprof::parse_profile_arg("abc"), chainprof::InvalidProfileError);
  CHECK_THROWS_AS(chainprof::parse_profile_arg("0"), chainprof::InvalidProfileError);
  CHECK_THROWS_AS(chainprof::parse_profile_arg("3x0"), chainprof::InvalidProfileError);
}

TEST_CASE("format_profile") {
  CHECK(chainprof::format_profile(ChainProfile{2, 3, 3, 5, 5}) == "2:1 3:2 5:2");
  CHECK(chainprof::format_profile(ChainProfile{9}) == "9:1");
}

TEST_CASE("write_dot emits one node and edge per element and cover") {
  std::ostringstream out;
  chainprof::write_dot(out, fixtures::diamond());
  std::string dot = out.str();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("2 -> 3;") != std::string::npos);
}
