#pragma once

#include "thhseg/budget.hpp"
#include "thhseg/models.hpp"
#include "thhseg/tate_ss.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace thhseg {

inline constexpr const char* chart_schema = "thhseg.chart/1";

struct ChartCell {
    int s = 0;
    int t = 0;
    std::size_t dim = 0;
    bool undetermined = false;

    bool operator==(const ChartCell&) const = default;
};

/// Dimension grid of a Tate page over its window, cells ordered by (s, t).
struct Chart {
    std::string model;  // "thh-mu" or "thh-bp"
    std::uint32_t p = 3;
    int index_max = 0;
    int page = 3;
    TateWindow window;
    std::vector<ChartCell> cells;

    bool operator==(const Chart& o) const;
};

/// Ê² or Ê³ of a THH model over the window. An empty window gives an empty
/// grid; ResourceError when the padded window exceeds the budget.
Chart make_chart(const HomologyModel& thh, int page, const TateWindow& window, const Budget& budget = {});

nlohmann::json to_json(const Chart& chart);
/// Inverse of to_json; ParseError/ConfigError on schema mismatches.
Chart chart_from_json(const nlohmann::json& j);

std::string to_tsv(const Chart& chart);
std::string to_text(const Chart& chart);
std::string to_svg(const Chart& chart);

} // namespace thhseg
