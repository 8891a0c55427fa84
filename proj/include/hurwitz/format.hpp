#pragma once

#include "hurwitz/cover.hpp"
#include "hurwitz/real.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hurwitz {

/// "-inf", "+inf" or the vertex id.
std::string endpoint_name(int endpoint);

/// Structured-text record:
///   cover
///   genus 0
///   vertices 0 1
///   edge 3 -inf 0
///   ...
///   aut 2
///   mult_complex 1/1
///   end
std::string cover_record(const TropicalCover& c);

nlohmann::json cover_json(const TropicalCover& c);

/// Graphviz digraph; inner vertices are ranked left to right by position.
std::string cover_dot(const TropicalCover& c, const std::string& name = "cover");

/// One line per SCF element ("t <id> <0|1>") and per even component ("colour <id> red").
std::string colouring_record(const TropicalCover& c, const Colouring& rho);

nlohmann::json colouring_json(const TropicalCover& c, const Colouring& rho);

nlohmann::json partition_json(const Partition& p);

}  // namespace hurwitz
