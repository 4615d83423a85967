#include "contact/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace contact
{

std::string render_table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        os << line << "\n";
    }
    return os.str();
}

std::map<int, std::string> divisor_labels(const SncConfiguration& cfg)
{
    std::map<int, std::string> out;
    for (const auto& d : cfg.divisors) {
        out[d.id] = d.label.empty() ? "E" + std::to_string(d.id) : d.label;
    }
    return out;
}

std::string render_configuration(const SncConfiguration& cfg)
{
    std::vector<std::vector<std::string>> rows{
        {"id", "label", "mult", "disc", "exceptional", "over_sigma", "genus", "self_int", "chi(E°)"}};
    for (int id : cfg.ids()) {
        const Divisor& d = cfg.divisor(id);
        std::string chi = "-";
        try {
            chi = std::to_string(euler_open_stratum(cfg, id));
        } catch (const std::exception&) {
        }
        rows.push_back({std::to_string(d.id), d.label, std::to_string(d.mult), std::to_string(d.disc),
                        d.exceptional ? "yes" : "no", d.over_sigma ? "yes" : "no",
                        d.genus ? std::to_string(*d.genus) : "-", d.self_int ? std::to_string(*d.self_int) : "-", chi});
    }
    std::ostringstream os;
    os << "ambient_dim " << cfg.ambient_dim << ", sigma " << cfg.sigma_label << "\n";
    os << render_table(rows);
    if (!cfg.cells.empty()) {
        std::vector<std::vector<std::string>> cells{{"cell", "count", "over_sigma"}};
        for (const auto& c : cfg.cells) {
            std::string ids;
            for (int id : c.ids) {
                ids += (ids.empty() ? "" : ",") + std::to_string(id);
            }
            cells.push_back({"[" + ids + "]", std::to_string(c.count),
                             c.over_sigma ? (*c.over_sigma ? "yes" : "no") : "?"});
        }
        os << render_table(cells);
    }
    return os.str();
}

std::string render_e1(const E1Page& page, const std::map<int, std::string>& labels)
{
    std::ostringstream os;
    os << "E1 page, m = " << page.m << ", d = " << page.d;
    if (page.degree_shift != 0) {
        os << ", total degree shifted by " << -page.degree_shift;
    }
    os << "\n";
    if (page.entries.empty()) {
        os << "(empty page)\n";
        os << "chi = 0\n";
        return os.str();
    }
    std::set<long long> ps;
    std::set<long long> qs;
    for (const auto& [pq, e] : page.entries) {
        ps.insert(pq.first);
        qs.insert(pq.second);
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"q\\p"};
    for (long long p : ps) {
        header.push_back(std::to_string(p));
    }
    rows.push_back(header);
    for (long long q : qs) {
        std::vector<std::string> row{std::to_string(q)};
        for (long long p : ps) {
            auto it = page.entries.find({p, q});
            if (it == page.entries.end()) {
                row.push_back(".");
                continue;
            }
            std::string cell = std::to_string(it->second.rank);
            for (long long t : it->second.torsion) {
                cell += "+Z/" + std::to_string(t);
            }
            std::string notes;
            for (const auto& c : it->second.contributors) {
                auto label = labels.count(c.id) ? labels.at(c.id) : "E" + std::to_string(c.id);
                notes += (notes.empty() ? "" : ",") + label + ":H" + std::to_string(c.homology_degree);
            }
            row.push_back(cell + " [" + notes + "]");
        }
        rows.push_back(row);
    }
    os << render_table(rows);
    std::vector<std::vector<std::string>> totals{{"total degree", "rank"}};
    for (const auto& [n, r] : page.rank_by_degree()) {
        totals.push_back({std::to_string(n), std::to_string(r)});
    }
    os << render_table(totals);
    os << "chi = " << page.euler() << "\n";
    return os.str();
}

std::string render_hc(const HcReport& report)
{
    std::ostringstream os;
    os << "H_c^*(X_m), m = " << report.m << ", d = " << report.d;
    if (report.degree_shift != 0) {
        os << ", degrees shifted by " << -report.degree_shift;
    }
    os << "\n";
    if (report.degrees.empty()) {
        os << "all degrees zero\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"degree", "E1 rank", "rational", "integral"}};
        for (const auto& [n, dr] : report.degrees) {
            std::string rational;
            switch (dr.status) {
            case RankStatus::zero:
                rational = "0";
                break;
            case RankStatus::exact:
                rational = "exact " + std::to_string(dr.lo);
                break;
            case RankStatus::bounds:
                rational = "bounds [" + std::to_string(dr.lo) + "," + std::to_string(dr.hi) + "]";
                break;
            }
            std::string integral = "undetermined";
            if (dr.integral_exact) {
                std::vector<std::string> parts;
                if (dr.e1_rank > 0) {
                    parts.push_back(dr.e1_rank == 1 ? "Z" : "Z^" + std::to_string(dr.e1_rank));
                }
                for (long long t : dr.torsion) {
                    parts.push_back("Z/" + std::to_string(t));
                }
                integral.clear();
                for (const auto& part : parts) {
                    integral += (integral.empty() ? "" : " + ") + part;
                }
                if (integral.empty()) {
                    integral = "0";
                }
                if (dr.graded_only) {
                    integral += " (graded)";
                }
            }
            rows.push_back({std::to_string(n), std::to_string(dr.e1_rank), rational, integral});
        }
        os << render_table(rows);
    }
    os << "chi = " << report.euler << "\n";
    os << "integral degeneration forced: " << (report.integral_forced ? "yes" : "no") << "\n";
    os << "rational degeneration forced (r <= d): " << (report.rational_window_forced ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_count(const CountReport& report)
{
    std::ostringstream os;
    os << "f = " << report.f << ", m = " << report.m << ", l = " << report.l << ", q = " << report.q << "\n";
    os << "total = " << report.total.str() << " (" << report.method << ", " << report.nodes << " nodes)\n";
    std::vector<std::vector<std::string>> rows{{"orders", "count"}};
    for (const auto& [orders, n] : report.strata) {
        std::string key;
        for (int o : orders) {
            key += (key.empty() ? "" : ",") + std::to_string(o);
        }
        rows.push_back({"(" + key + ")", n.str()});
    }
    if (rows.size() > 1) {
        os << render_table(rows);
    }
    return os.str();
}

} // namespace contact
