#include "latca/square_export.hpp"

#include <stdexcept>

#include "json.hpp"

namespace latca {

namespace {

std::string pgm_header(int order) {
  return "P5\n" + std::to_string(order) + " " + std::to_string(order) +
         "\n255\n";
}

std::uint8_t gray_level(int symbol, int order) {
  if (order <= 1) return 0;
  return static_cast<std::uint8_t>((symbol - 1) * 255 / (order - 1));
}

}  // namespace

SquareFormat parse_square_format(const std::string& name) {
  if (name == "csv") return SquareFormat::Csv;
  if (name == "json") return SquareFormat::Json;
  if (name == "pgm") return SquareFormat::Pgm;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected csv, json or pgm)");
}

std::string export_square(const LatinSquareGrid& grid, SquareFormat format) {
  const int N = grid.order();
  switch (format) {
    case SquareFormat::Csv: {
      std::string out;
      for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
          if (j > 1) out += ',';
          out += std::to_string(grid.at(i, j));
        }
        out += '\n';
      }
      return out;
    }
    case SquareFormat::Json: {
      nlohmann::ordered_json j;
      j["order"] = N;
      auto& cells = j["cells"] = nlohmann::json::array();
      for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) cells.push_back(grid.at(i, k));
      return j.dump(2) + "\n";
    }
    case SquareFormat::Pgm: {
      std::string out = pgm_header(N);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          out += static_cast<char>(gray_level(grid.at(i, j), N));
      return out;
    }
  }
  throw std::logic_error("unhandled format");
}

std::string export_mask(int order, const CoordSet& coords,
                        SquareFormat format) {
  std::vector<std::uint8_t> marked(
      static_cast<std::size_t>(order) * order, 0);
  for (const auto& [i, j] : coords.pairs) {
    if (i < 1 || i > order || j < 1 || j > order)
      throw std::invalid_argument("coordinate out of range");
    marked[static_cast<std::size_t>(i - 1) * order + (j - 1)] = 1;
  }
  switch (format) {
    case SquareFormat::Csv: {
      std::string out;
      for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
          if (j > 0) out += ',';
          out += marked[static_cast<std::size_t>(i) * order + j] ? '1' : '0';
        }
        out += '\n';
      }
      return out;
    }
    case SquareFormat::Json: {
      nlohmann::ordered_json j;
      j["order"] = order;
      j["mask"] = marked;
      return j.dump(2) + "\n";
    }
    case SquareFormat::Pgm: {
      std::string out = pgm_header(order);
      for (std::uint8_t m : marked) out += static_cast<char>(m ? 255 : 0);
      return out;
    }
  }
  throw std::logic_error("unhandled format");
}

}  // namespace latca
