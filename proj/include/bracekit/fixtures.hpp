#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bracekit/graph.hpp"
#include "bracekit/planar.hpp"

namespace bracekit {

/// Named graphs transcribed from drawings. Vertex numbering follows the
/// drawing labels in the order documented in fixtures.cpp.
enum class FixtureId {
  kC4,
  kK4,
  kK4minus,
  kK33,
  kCube,
  kPrism,
  kHeawood,
  kFig2b,
  kFig2c,
  kFig4a,
  kFig4b,
  kFig5a,
  kFig5b,
  kFig6a,
  kFig6b,
  kFig7a,
  kFig7b,
};

std::span<const FixtureId> all_fixtures();
std::string_view fixture_name(FixtureId id);
/// Throws UnknownFixture.
FixtureId fixture_id(std::string_view name);

Graph fixture(FixtureId id);
Graph fixture(std::string_view name);

/// Drawing label of every vertex ("A1", "U3", ...).
std::vector<std::string> fixture_labels(FixtureId id);

/// For fixtures drawn as star products: the shore of the principal 3-edge
/// cut on the first factor's side.
std::optional<std::vector<Vertex>> principal_shore(FixtureId id);

/// Embedding read off the drawing, for the planar fixtures (C4, Cube).
std::optional<RotationSystem> fixture_rotation(FixtureId id);

/// One graph6 line per fixture in all_fixtures() order, plus an index with
/// `line<TAB>name<TAB>n<TAB>m` rows.
void write_fixture_bundle(std::ostream& graphs, std::ostream& index);

}  // namespace bracekit
