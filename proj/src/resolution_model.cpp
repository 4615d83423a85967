#include "contact/resolution_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "contact/errors.hpp"

namespace contact
{

bool SncConfiguration::has_divisor(int id) const
{
    return std::any_of(divisors.begin(), divisors.end(),
                       [id](const Divisor& d) { return d.id == id; });
}

const Divisor& SncConfiguration::divisor(int id) const
{
    for (const auto& d : divisors) {
        if (d.id == id) {
            return d;
        }
    }
    throw DomainError("no divisor with id " + std::to_string(id));
}

Divisor& SncConfiguration::divisor(int id)
{
    for (auto& d : divisors) {
        if (d.id == id) {
            return d;
        }
    }
    throw DomainError("no divisor with id " + std::to_string(id));
}

int SncConfiguration::next_id() const
{
    int next = 0;
    for (const auto& d : divisors) {
        next = std::max(next, d.id + 1);
    }
    return next;
}

std::vector<int> SncConfiguration::ids() const
{
    std::vector<int> out;
    out.reserve(divisors.size());
    for (const auto& d : divisors) {
        out.push_back(d.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ValidationReport::valid() const
{
    return errors().empty();
}

std::vector<Issue> ValidationReport::errors() const
{
    std::vector<Issue> out;
    std::copy_if(issues.begin(), issues.end(), std::back_inserter(out),
                 [](const Issue& i) { return i.severity == Severity::error; });
    return out;
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& issue : issues) {
        if (!first) {
            os << "; ";
        }
        first = false;
        os << (issue.severity == Severity::error ? "" : "warning: ") << issue.subject << ": "
           << issue.message;
    }
    return os.str();
}

namespace
{

std::string divisor_subject(const Divisor& d)
{
    std::string s = "divisor " + std::to_string(d.id);
    if (!d.label.empty()) {
        s += " (" + d.label + ")";
    }
    return s;
}

std::string cell_subject(std::size_t index, const IntersectionCell& c)
{
    std::ostringstream os;
    os << "cell " << index << " [";
    for (std::size_t k = 0; k < c.ids.size(); ++k) {
        os << (k ? "," : "") << c.ids[k];
    }
    os << "]";
    return os.str();
}

} // namespace

ValidationReport validate_configuration(const SncConfiguration& cfg)
{
    ValidationReport report;
    auto error = [&](std::string subject, std::string message) {
        report.issues.push_back({Severity::error, std::move(subject), std::move(message)});
    };

    if (cfg.ambient_dim < 1) {
        error("configuration", "ambient_dim ≥ 1");
    }
    const bool curve = cfg.ambient_dim == 2;

    std::set<int> seen;
    bool any_sigma = false;
    for (const auto& d : cfg.divisors) {
        const std::string subject = divisor_subject(d);
        if (!seen.insert(d.id).second) {
            error(subject, "duplicate divisor id");
        }
        if (d.id < 0) {
            error(subject, "divisor id must be nonnegative");
        }
        if (d.mult < 1) {
            error(subject, "mult ≥ 1");
        }
        if (d.disc < 1) {
            error(subject, "disc ≥ 1");
        }
        if (!d.exceptional && d.disc != 1) {
            error(subject, "non-exceptional ⇒ disc = 1");
        }
        if (curve && !d.genus) {
            error(subject, "genus required when ambient_dim = 2");
        }
        if (d.genus && *d.genus < 0) {
            error(subject, "genus ≥ 0");
        }
        if (curve && d.exceptional && (!d.self_int || *d.self_int >= 0)) {
            error(subject, "exceptional ⇒ self_int < 0");
        }
        any_sigma = any_sigma || d.over_sigma;
    }
    if (!any_sigma) {
        error("configuration", "Σ nonempty: at least one divisor must have over_sigma = true");
    }
    if (cfg.ambient_dim == 1 && !cfg.cells.empty()) {
        error("configuration", "d = 1 ⇒ no intersection cells");
    }

    std::set<std::vector<int>> cell_keys;
    for (std::size_t k = 0; k < cfg.cells.size(); ++k) {
        const auto& c = cfg.cells[k];
        const std::string subject = cell_subject(k, c);
        std::vector<int> sorted = c.ids;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            error(subject, "divisor_ids distinct");
        }
        if (c.ids.size() < 2) {
            error(subject, "a cell joins at least two divisors");
        }
        if (curve && c.ids.size() != 2) {
            error(subject, "curve cells join exactly two divisors");
        }
        if (cfg.ambient_dim >= 1 && static_cast<int>(c.ids.size()) > cfg.ambient_dim) {
            error(subject, "more than ambient_dim divisors cannot meet in an SNC divisor");
        }
        for (int id : c.ids) {
            if (!seen.count(id)) {
                error(subject, "unknown divisor id " + std::to_string(id));
            }
        }
        if (c.count < 1) {
            error(subject, "count ≥ 1");
        }
        cell_keys.insert(sorted);
    }
    // Every pair inside a higher cell must itself meet.
    for (std::size_t k = 0; k < cfg.cells.size(); ++k) {
        const auto& c = cfg.cells[k];
        if (c.ids.size() < 3) {
            continue;
        }
        for (std::size_t a = 0; a < c.ids.size(); ++a) {
            for (std::size_t b = a + 1; b < c.ids.size(); ++b) {
                std::vector<int> pair{std::min(c.ids[a], c.ids[b]), std::max(c.ids[a], c.ids[b])};
                if (!cell_keys.count(pair)) {
                    error(cell_subject(k, c), "face (" + std::to_string(pair[0]) + "," +
                                                  std::to_string(pair[1]) + ") missing");
                }
            }
        }
    }
    return report;
}

void require_valid(const SncConfiguration& cfg)
{
    auto report = validate_configuration(cfg);
    if (!report.valid()) {
        ValidationReport errors_only{report.errors()};
        throw ValidationError("invalid configuration: " + errors_only.summary());
    }
}

DualComplex build_dual_complex(const SncConfiguration& cfg)
{
    require_valid(cfg);
    DualComplex dc;
    for (int id : cfg.ids()) {
        dc.vertices.push_back({id, cfg.divisor(id).mult});
    }
    for (const auto& c : cfg.cells) {
        if (c.ids.size() == 2) {
            int i = std::min(c.ids[0], c.ids[1]);
            int j = std::max(c.ids[0], c.ids[1]);
            dc.one_cells.push_back({i, j, cfg.divisor(i).mult + cfg.divisor(j).mult, c.count,
                                    c.over_sigma.value_or(false)});
        } else {
            std::vector<int> ids = c.ids;
            std::sort(ids.begin(), ids.end());
            dc.higher_cells.push_back(std::move(ids));
        }
    }
    return dc;
}

long long puncture_count(const SncConfiguration& cfg, int id)
{
    long long k = 0;
    for (const auto& c : cfg.cells) {
        if (c.ids.size() == 2 && std::find(c.ids.begin(), c.ids.end(), id) != c.ids.end()) {
            k += c.count;
        }
    }
    return k;
}

long long euler_open_stratum(const SncConfiguration& cfg, int id)
{
    const Divisor& d = cfg.divisor(id);
    if (d.euler) {
        return *d.euler;
    }
    if (cfg.ambient_dim == 1) {
        return 1;
    }
    if (cfg.ambient_dim == 2) {
        if (!d.genus) {
            throw ValidationError(divisor_subject(d) + ": genus required when ambient_dim = 2");
        }
        return (2 - 2LL * *d.genus) - puncture_count(cfg, id);
    }
    throw UnsupportedError("unsupported dimension: Euler characteristic of " + divisor_subject(d) +
                           " must be supplied when ambient_dim ≥ 3");
}

} // namespace contact
