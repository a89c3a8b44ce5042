#include "thhseg/chart.hpp"

#include "thhseg/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace thhseg {

bool Chart::operator==(const Chart& o) const {
    return model == o.model && p == o.p && index_max == o.index_max && page == o.page &&
           window.s_min == o.window.s_min && window.s_max == o.window.s_max &&
           window.degree_min == o.window.degree_min && window.degree_max == o.window.degree_max && cells == o.cells;
}

Chart make_chart(const HomologyModel& thh, int page, const TateWindow& window, const Budget& budget) {
    if (!thh.is_thh())
        throw ConfigError("charts need a THH model");
    if (page != 2 && page != 3)
        throw ConfigError("only pages 2 and 3 are computed");
    Chart c;
    c.model = "thh-" + to_string(thh.spectrum());
    c.p = thh.p();
    c.index_max = thh.index_max();
    c.page = page;
    c.window = window;
    if (window.empty())
        return c;

    const TateWindow padded = window.padded(2, 1);
    std::size_t cells = 0;
    for (const auto& [s, t] : padded.bidegrees())
        cells += thh.algebra().basis(t).size();
    budget.check(cells, "Tate chart window");

    const TatePage P = page == 2 ? e2_page(thh, window) : e3_page(thh, window);
    for (const auto& [s, t] : window.bidegrees())
        c.cells.push_back({s, t, P.dim(s, t), P.undetermined(s, t)});
    return c;
}

nlohmann::json to_json(const Chart& chart) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : chart.cells)
        cells.push_back({{"s", c.s}, {"t", c.t}, {"dim", c.dim}, {"undetermined", c.undetermined}});
    return {{"schema", chart_schema},
            {"model", chart.model},
            {"p", chart.p},
            {"index_max", chart.index_max},
            {"page", chart.page},
            {"window",
             {{"s_min", chart.window.s_min},
              {"s_max", chart.window.s_max},
              {"degree_min", chart.window.degree_min},
              {"degree_max", chart.window.degree_max}}},
            {"cells", cells}};
}

Chart chart_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<std::string>() != chart_schema)
            throw ConfigError("unsupported chart schema '" + j.at("schema").get<std::string>() + "'");
        Chart c;
        c.model = j.at("model").get<std::string>();
        c.p = j.at("p").get<std::uint32_t>();
        c.index_max = j.at("index_max").get<int>();
        c.page = j.at("page").get<int>();
        const auto& w = j.at("window");
        c.window = {w.at("s_min").get<int>(), w.at("s_max").get<int>(), w.at("degree_min").get<int>(),
                    w.at("degree_max").get<int>()};
        for (const auto& e : j.at("cells"))
            c.cells.push_back({e.at("s").get<int>(), e.at("t").get<int>(), e.at("dim").get<std::size_t>(),
                               e.at("undetermined").get<bool>()});
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed chart: ") + e.what(), 0);
    }
}

std::string to_tsv(const Chart& chart) {
    std::ostringstream out;
    out << "s\tt\tdegree\tdim\tundetermined\n";
    for (const auto& c : chart.cells)
        out << c.s << '\t' << c.t << '\t' << c.s + c.t << '\t' << c.dim << '\t' << (c.undetermined ? 1 : 0) << '\n';
    return out.str();
}

namespace {

int max_t(const Chart& chart) {
    int m = 0;
    for (const auto& c : chart.cells)
        m = std::max(m, c.t);
    return m;
}

} // namespace

std::string to_text(const Chart& chart) {
    std::ostringstream out;
    out << chart.model << " p=" << chart.p << " page " << chart.page << " (rows s, columns t, ? undetermined)\n";
    if (chart.cells.empty())
        return out.str();
    const int tmax = max_t(chart);
    out << "  s\\t";
    for (int t = 0; t <= tmax; ++t)
        out << (t < 10 ? "  " : " ") << t;
    out << '\n';
    for (int s = chart.window.s_max; s >= chart.window.s_min; --s) {
        char head[16];
        std::snprintf(head, sizeof head, "%4d", s);
        out << head;
        std::string row;
        for (int t = 0; t <= tmax; ++t) {
            const auto it = std::find_if(chart.cells.begin(), chart.cells.end(),
                                         [&](const ChartCell& c) { return c.s == s && c.t == t; });
            std::string cell = "   ";
            if (it != chart.cells.end()) {
                const std::string v = it->undetermined ? "?" : it->dim == 0 ? "." : std::to_string(it->dim);
                cell = std::string(3 - std::min<std::size_t>(3, v.size()), ' ') + v;
            }
            row += cell;
        }
        out << row << '\n';
    }
    return out.str();
}

std::string to_svg(const Chart& chart) {
    const int cell = 24;
    const int margin = 40;
    const int cols = chart.cells.empty() ? 1 : max_t(chart) + 1;
    const int rows = chart.window.empty() ? 1 : chart.window.s_max - chart.window.s_min + 1;
    const int width = 2 * margin + cols * cell;
    const int height = 2 * margin + rows * cell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"monospace\" font-size=\"9\">\n";
    out << "<title>" << chart.model << " p=" << chart.p << " page " << chart.page << "</title>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width - margin << "\" y=\"" << height - margin / 3 << "\">t</text>\n";
    out << "<text x=\"" << margin / 4 << "\" y=\"" << margin - 8 << "\">s</text>\n";
    if (!chart.cells.empty()) {
        for (int t = 0; t < cols; t += 2)
            out << "<text x=\"" << margin + t * cell + cell / 2 - 3 << "\" y=\"" << height - margin + 12 << "\">" << t
                << "</text>\n";
        for (int s = chart.window.s_min; s <= chart.window.s_max; s += 2)
            out << "<text x=\"4\" y=\"" << margin + (chart.window.s_max - s) * cell + cell / 2 + 3 << "\">" << s
                << "</text>\n";
    }
    for (const auto& c : chart.cells) {
        if (c.dim == 0 && !c.undetermined)
            continue;
        const int x = margin + c.t * cell + cell / 2;
        const int y = margin + (chart.window.s_max - c.s) * cell + cell / 2;
        if (c.undetermined) {
            out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"none\" stroke=\"gray\"/>\n";
            continue;
        }
        const std::size_t shown = std::min<std::size_t>(c.dim, 3);
        for (std::size_t k = 0; k < shown; ++k)
            out << "<circle cx=\"" << x - 5 * static_cast<int>(shown - 1) / 2 + 5 * static_cast<int>(k) << "\" cy=\""
                << y << "\" r=\"2.5\" fill=\"black\"/>\n";
        if (c.dim > 3)
            out << "<text x=\"" << x + 6 << "\" y=\"" << y - 4 << "\">" << c.dim << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace thhseg
