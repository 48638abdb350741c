#pragma once

#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/complexes/simplex.hpp"
#include "brauer/complexes/simplicial_set.hpp"
#include "brauer/errors.hpp"

namespace brauer::complexes {

// "sset v1", then per dimension "dim d count" followed by one line per
// simplex: "id face_0 ... face_d" with faces written as "id:word".
inline void write_sset(std::ostream& os, const SimplicialSet& s) {
  os << "sset v1\n";
  const int top = s.dimension();
  for (int di = 0; di <= top; ++di) {
    const auto d = static_cast<std::size_t>(di);
    os << "dim " << d << ' ' << s.count(d) << '\n';
    for (std::size_t id = 0; id < s.count(d); ++id) {
      os << id;
      if (d > 0) {
        for (const SimplexRef& f : s.faces(d, id)) os << ' ' << to_string(f);
      }
      os << '\n';
    }
  }
}

inline SpacePtr read_sset(std::istream& is, std::string label = "file") {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("sset: empty input");
  {
    std::istringstream hs(line);
    std::string magic, version, extra;
    if (!(hs >> magic >> version) || magic != "sset" || version != "v1" || (hs >> extra)) {
      throw ParseError("sset: expected header 'sset v1'");
    }
  }
  SimplicialSet::Builder b(std::move(label));
  std::size_t expected_dim = 0;
  std::vector<SimplexRef> faces;
  while (next_line()) {
    std::istringstream ls(line);
    std::string kw, extra;
    std::size_t d = 0, count = 0;
    if (!(ls >> kw >> d >> count) || kw != "dim" || (ls >> extra)) {
      throw ParseError("sset: expected 'dim d count', got '" + line + "'");
    }
    if (d != expected_dim) throw ParseError("sset: dimensions must appear in order from 0");
    if (d > kMaxDimension) throw ParseError("sset: dimension above 15");
    for (std::size_t id = 0; id < count; ++id) {
      if (!next_line()) throw ParseError("sset: truncated section for dim " + std::to_string(d));
      std::istringstream ss(line);
      std::size_t given = 0;
      if (!(ss >> given) || given != id) {
        throw ParseError("sset: simplex ids must be 0..count-1 in order");
      }
      faces.clear();
      std::string tok;
      while (ss >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("sset: face '" + tok + "' lacks ':'");
        std::size_t fid = 0;
        try {
          std::size_t used = 0;
          fid = std::stoul(tok.substr(0, colon), &used);
          if (used != colon) throw std::invalid_argument("id");
        } catch (const std::exception&) {
          throw ParseError("sset: bad face id in '" + tok + "'");
        }
        const DegeneracyMask mask = parse_degeneracy_word(std::string_view(tok).substr(colon + 1));
        const auto w = static_cast<std::size_t>(std::popcount(mask));
        if (d == 0 || w > d - 1 || (mask >> (d - 1)) != 0) {
          throw ParseError("sset: degeneracy word out of range in '" + tok + "'");
        }
        faces.push_back({static_cast<std::uint32_t>(fid), mask,
                         static_cast<std::uint8_t>(d - 1 - w)});
      }
      try {
        b.add(d, faces);
      } catch (const InvalidArgumentError& e) {
        throw ParseError(std::string("sset: ") + e.what());
      }
    }
    ++expected_dim;
  }
  return std::make_shared<const SimplicialSet>(std::move(b).finish());
}

}  // namespace brauer::complexes
