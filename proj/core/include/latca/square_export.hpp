#pragma once

#include <string>

#include "latca/latin_square.hpp"

namespace latca {

enum class SquareFormat { Csv, Json, Pgm };

/// Parses "csv" | "json" | "pgm".
SquareFormat parse_square_format(const std::string& name);

/// Serializes a square. CSV: one row of decimal symbols per line.
/// JSON: {"order": N, "cells": [row-major symbols]}. PGM: binary P5 with
/// symbol k mapped linearly onto 0..255.
std::string export_square(const LatinSquareGrid& grid, SquareFormat format);

/// Serializes a cell mask marking the coordinate set (1 / 255 on marked
/// cells) in the same format family as the square export.
std::string export_mask(int order, const CoordSet& coords,
                        SquareFormat format);

}  // namespace latca
