#pragma once

#include <optional>
#include <string>

#include "torus4/angle.hpp"
#include "torus4/map.hpp"
#include "torus4/mobile.hpp"
#include "torus4/transversal.hpp"

namespace torus4 {

// TMAP v1. Dart names are arbitrary tokens, numbered by first appearance in
// the vertex lines; vertex ids must be 0, 1, ... in order. Lines starting
// with ts, orient or label are skipped here and read by the parsers below.
Map parse_tmap(const std::string& text);
// Renumbers darts by first appearance in the rotations (vertex 0 first).
// Parsed maps are already in this form.
Map normalized(const Map& m);
// Writes normalized(m): vertices ascending, edges by smaller dart, then the root.
std::string write_tmap(const Map& m);

// `ts <edge> <blue|red> <out-dart>`. Returns nullopt when there are no ts lines.
std::optional<TransversalStructure> parse_ts(const Map& m, const std::string& text);
std::string write_ts(const Map& m, const TransversalStructure& ts);

// `orient <angle-edge> <head-vertex>`, angle-map vertex ids (faces after vertices).
std::optional<FourOrientation> parse_orient(const Map& m, const std::string& text);
std::string write_orient(const Map& m, const FourOrientation& d);

// `label <dart> <0..3>`
std::string write_labels(const TTSLabeling& l);

// TMAP with `stem <dart>` lines: a stem dart sits in a vertex line but in no
// edge line. Genus is not checked.
ExtendedMobile parse_mobile(const std::string& text);
std::string write_mobile(const ExtendedMobile& m);

}  // namespace torus4
