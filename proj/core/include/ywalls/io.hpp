#ifndef YWALLS_IO_HPP
#define YWALLS_IO_HPP

#include <string>
#include <string_view>

#include "ywalls/abacus.hpp"
#include "ywalls/series.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls {

// All writers produce compact single-line JSON with a fixed key order.
// Readers throw std::invalid_argument on malformed input; they do not check
// the wall rules.

/// {"type":"D","rank":n,"columns":[{"blocks":k,"top":"lower"|"upper"},...]}
std::string wall_to_json(const YoungWallD& wall);
YoungWallD wall_from_json(std::string_view text);

/// {"rank":n,"uncolored":[p,...],"colored":[{"pos":p,"color":"white"|"black","mult":m},...]}
std::string abacus_to_json(const AbacusConfig& a);
AbacusConfig abacus_from_json(std::string_view text);

/// Core, its wall, z-coordinates, bar count and channel counts.
std::string core_result_to_json(const CoreResult& r);

/// {"vars":v,"bound":N,"motivic":b,"terms":[{"e":[...],"L":k,"coeff":c},...]}
/// "L" appears only for motivic series. Coefficients that do not fit in 64
/// bits are written as decimal strings.
std::string series_to_json(const TruncatedSeries& s);
/// One term object per line.
std::string series_to_jsonl(const TruncatedSeries& s);

}  // namespace ywalls

#endif
