#pragma once

/// \file catalog.hpp
/// \brief Named graphs with fixed vertex orderings.
///
/// Vertex orders (letters as in the usual drawings):
///   bull   a b c d e         edges ab bc ca ad be
///   dart   a b c d e         bull + bd
///   F1     a b c d e f       K4{abcd}, ea, fd
///   F2     a b c d e f       K4{abcd}, ea, fc, fd
///   F3     a b c d y z       K4{abcd}, za, zb, yb
///   Q      j1 j2 j3 i1 i2 i3 triangle j1j2j3, i1j1, i2j2, i3j2, i3j3
///   F4     a b c d x y z     ab bd dc ca ad, ya, xd, z isolated
///   F5     a b c d f y z     K4{abcd}, za, zb, yb, fd
///   P_r, C_r                 0-1-...-(r-1) (cycle closes r-1 to 0)
///   K_{1,s}                  centre 0, leaves 1..s
///   S_{h,i,j}                centre 0, then the legs of length h, i, j in turn

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

enum class Named { Path, Cycle, Complete, Star, SubdividedClaw, Bull, Dart, F1, F2, F3, F4, F5, Q };

/// Path/Cycle/Complete take r (Cycle needs r >= 3); Star takes s for K_{1,s};
/// SubdividedClaw takes h <= i <= j, all >= 1. Fixed graphs take no parameters.
Graph catalog(Named name, std::span<const int> params = {});

/// Parses names such as "P4", "C5", "K3", "K1,3", "S1,2,3", "bull", "F5",
/// "2K2", "K1,3+2P1", "co-F3", "co-(P1+P4)", "P1+co-(2P1+P2)". A leading '@'
/// is ignored. Throws std::invalid_argument on unknown names or bad parameters.
Graph named_graph(std::string_view expression);

}  // namespace splitcw
