#include "qtcomb/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtcomb {

std::string family_name(Family f) {
    switch (f) {
        case Family::LD: return "LD";
        case Family::LSQ: return "LSQ";
        case Family::LSQPrime: return "LSQ'";
        case Family::DPeak: return "D";
        case Family::SQPrimePeak: return "SQ'";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "LD") return Family::LD;
    if (name == "LSQ") return Family::LSQ;
    if (name == "LSQ'" || name == "LSQp") return Family::LSQPrime;
    if (name == "D") return Family::DPeak;
    if (name == "SQ'" || name == "SQp") return Family::SQPrimePeak;
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

bool is_square_family(Family f) {
    return f == Family::LSQ || f == Family::LSQPrime || f == Family::SQPrimePeak;
}

bool is_peak_family(Family f) {
    return f == Family::DPeak || f == Family::SQPrimePeak;
}

bool needs_free_base_label(Family f) {
    return f == Family::LSQPrime || f == Family::SQPrimePeak;
}

// All step words of the given size; Dyck-only prunes below-diagonal moves.
void enumerate_step_words(int size, bool dyck_only,
                          const std::function<void(const SquarePath&)>& visit) {
    if (size == 0) {
        visit(SquarePath(""));
        return;
    }
    std::string word;
    word.reserve(static_cast<std::size_t>(2 * size));
    std::function<void(int, int)> rec = [&](int n, int e) {
        if (n == size && e == size) {
            if (word.back() == 'E') visit(SquarePath(word));
            return;
        }
        if (n < size) {
            word.push_back('N');
            rec(n + 1, e);
            word.pop_back();
        }
        if (e < size && (!dyck_only || e < n)) {  // Dyck: never go below the diagonal
            word.push_back('E');
            rec(n, e + 1);
            word.pop_back();
        }
    };
    rec(0, 0);
}

// Rows sorted by (diagonal, row) = reading order.
std::vector<int> reading_rows(const SquarePath& path) {
    const auto& a = path.area_word();
    std::vector<int> rows(a.size());
    std::iota(rows.begin(), rows.end(), 1);
    std::stable_sort(rows.begin(), rows.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i - 1)] < a[static_cast<std::size_t>(j - 1)];
    });
    return rows;
}

void for_each_subset(const std::vector<int>& items, int k,
                     const std::function<void(const std::vector<int>&)>& visit) {
    int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            visit(pick);
            return;
        }
        int need = k - static_cast<int>(pick.size());
        for (int i = start; i <= n - need; ++i) {
            pick.push_back(items[static_cast<std::size_t>(i)]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

void emit_with_valleys(DecoratedPath& p, int k, Family family,
                       const std::function<void(const DecoratedPath&)>& visit) {
    std::vector<int> v = p.contractible_valleys();
    for_each_subset(v, k, [&](const std::vector<int>& dv) {
        p.dv = dv;
        if (needs_free_base_label(family) && !p.has_free_base_label()) return;
        visit(p);
    });
    p.dv.clear();
}

// Peak-model labellings: choose rows for zeros and which positive reading
// positions carry the big decreasing string.
void enumerate_peak_labellings(const SquarePath& path, const FamilyParams& params,
                               const std::function<void(const DecoratedPath&)>& visit) {
    const int size = path.size();
    const int m = params.zeros, n = params.positives, d = params.peaks;
    const auto& a = path.area_word();
    std::vector<int> order = reading_rows(path);
    std::vector<int> peak_rows = path.peak_rows();

    std::vector<int> all_rows(static_cast<std::size_t>(size));
    std::iota(all_rows.begin(), all_rows.end(), 1);
    for_each_subset(all_rows, m, [&](const std::vector<int>& zrows) {
        std::vector<int> positive_order;
        positive_order.reserve(static_cast<std::size_t>(n));
        for (int row : order)
            if (!std::binary_search(zrows.begin(), zrows.end(), row))
                positive_order.push_back(row);
        std::vector<int> positions(static_cast<std::size_t>(n));
        std::iota(positions.begin(), positions.end(), 0);
        for_each_subset(positions, d, [&](const std::vector<int>& bigpos) {
            DecoratedPath p;
            p.path = path;
            p.labels.assign(static_cast<std::size_t>(size), 0);
            int next_small = 1, next_big = n;
            for (int pos = 0; pos < n; ++pos) {
                int row = positive_order[static_cast<std::size_t>(pos)];
                if (std::binary_search(bigpos.begin(), bigpos.end(), pos)) {
                    if (!std::binary_search(peak_rows.begin(), peak_rows.end(), row)) return;
                    p.labels[static_cast<std::size_t>(row - 1)] = next_big--;
                } else {
                    p.labels[static_cast<std::size_t>(row - 1)] = next_small++;
                }
            }
            if (!p.is_valid_labelling()) return;
            emit_with_valleys(p, params.valleys, params.family, visit);
        });
    });
}

// Full labellings for LD/LSQ/LSQ': values 0..label_max, exactly m zeros.
void enumerate_full_labellings(const SquarePath& path, const FamilyParams& params,
                               const std::function<void(const DecoratedPath&)>& visit) {
    const int size = path.size();
    const int m = params.zeros;
    const int lmax = params.label_max < 0 ? params.positives : params.label_max;
    const auto& a = path.area_word();
    const int s = path.shift();

    DecoratedPath p;
    p.path = path;
    p.labels.assign(static_cast<std::size_t>(size), 0);

    std::function<void(int, int, bool)> rec = [&](int row, int zeros_used, bool base_positive) {
        if (row > size) {
            if (zeros_used != m || !base_positive) return;
            emit_with_valleys(p, params.valleys, params.family, visit);
            return;
        }
        int ai = a[static_cast<std::size_t>(row - 1)];
        int lo = 0;
        if (row == 1) {
            if (ai == 0) lo = 1;
        } else if (ai > a[static_cast<std::size_t>(row - 2)]) {
            lo = p.labels[static_cast<std::size_t>(row - 2)] + 1;
        }
        for (int v = lo; v <= lmax; ++v) {
            if (v == 0 && zeros_used == m) {
                continue;
            }
            p.labels[static_cast<std::size_t>(row - 1)] = v;
            rec(row + 1, zeros_used + (v == 0 ? 1 : 0),
                base_positive || (ai == -s && v > 0));
        }
        p.labels[static_cast<std::size_t>(row - 1)] = 0;
    };
    rec(1, 0, false);
}

}  // namespace

void enumerate_paths(const FamilyParams& params,
                     const std::function<void(const DecoratedPath&)>& visit) {
    const int size = params.zeros + params.positives;
    if (params.zeros < 0 || params.positives < 0 || params.valleys < 0 || params.peaks < 0)
        return;
    if (!is_peak_family(params.family) && params.peaks != 0)
        throw std::invalid_argument("enumerate_paths: peaks only apply to peak families");
    if (params.peaks > params.positives) return;
    if (size == 0) {
        // the only path with no rows is the empty path, m = k = d = 0
        if (params.zeros == 0 && params.valleys == 0 && params.peaks == 0) {
            DecoratedPath p;
            p.path = SquarePath("");
            visit(p);
        }
        return;
    }
    if (params.positives == 0) return;  // a positive base label is required

    bool dyck = !is_square_family(params.family);
    enumerate_step_words(size, dyck, [&](const SquarePath& path) {
        if (dyck && !path.is_dyck()) return;
        if (is_peak_family(params.family))
            enumerate_peak_labellings(path, params, visit);
        else
            enumerate_full_labellings(path, params, visit);
    });
}

std::vector<DecoratedPath> collect_paths(const FamilyParams& params) {
    std::vector<DecoratedPath> out;
    enumerate_paths(params, [&](const DecoratedPath& p) { out.push_back(p); });
    return out;
}

bool family_contains(const FamilyParams& params, const DecoratedPath& p) {
    if (p.size() != params.zeros + params.positives) return false;
    if (p.zero_count() != params.zeros) return false;
    if (static_cast<int>(p.dv.size()) != params.valleys) return false;
    if (!p.dr.empty()) return false;  // valley-decorated families only
    if (!is_square_family(params.family) && !p.path.is_dyck()) return false;
    if (!p.is_valid_labelling() || !p.decorations_valid()) return false;
    if (needs_free_base_label(params.family) && !p.has_free_base_label()) return false;
    if (is_peak_family(params.family)) {
        // reading word must shuffle 1..n-d with the decreasing string, the d
        // biggest labels on peaks
        const int n = params.positives, d = params.peaks;
        std::vector<int> word = p.reading_word();
        int expect_small = 1, expect_big = n;
        std::vector<int> peaks = p.path.peak_rows();
        for (int w : word) {
            if (w == 0) continue;
            if (w > n) return false;
            if (w > n - d) {
                if (w != expect_big--) return false;
            } else {
                if (w != expect_small++) return false;
            }
        }
        if (expect_small != n - d + 1 || expect_big != n - d) return false;
        for (int i = 1; i <= p.size(); ++i)
            if (p.labels[static_cast<std::size_t>(i - 1)] > n - d &&
                !std::binary_search(peaks.begin(), peaks.end(), i))
                return false;
    }
    return true;
}

Enumerator qt_enumerator(const FamilyParams& params) {
    Enumerator out;
    enumerate_paths(params, [&](const DecoratedPath& p) {
        MPoly term = MPoly::monomial(1, static_cast<std::uint32_t>(p.dinv()),
                                     static_cast<std::uint32_t>(p.area()));
        out.total += term;
        out.by_r[p.diagonal_touch()] += term;
        ++out.count;
    });
    return out;
}

namespace {

// dominant content: multiplicity vector of values 1..lmax, accepted when
// weakly decreasing (coefficient of the dominant monomial x_1^{l1} x_2^{l2}..)
bool dominant_content(const DecoratedPath& p, int lmax, std::vector<int>* content) {
    std::vector<int> mult(static_cast<std::size_t>(lmax) + 1, 0);
    for (int v : p.labels)
        if (v > 0) ++mult[static_cast<std::size_t>(v)];
    int last = static_cast<int>(mult.size()) - 1;
    while (last >= 1 && mult[static_cast<std::size_t>(last)] == 0) --last;
    for (int v = 1; v < last; ++v)
        if (mult[static_cast<std::size_t>(v)] < mult[static_cast<std::size_t>(v + 1)]) return false;
    content->assign(mult.begin() + 1, mult.begin() + 1 + last);
    return true;
}

}  // namespace

SymFunc monomial_expansion(const FamilyParams& params) {
    SymFunc out(Basis::Monomial);
    const int lmax = params.label_max < 0 ? params.positives : params.label_max;
    enumerate_paths(params, [&](const DecoratedPath& p) {
        std::vector<int> content;
        if (!dominant_content(p, lmax, &content)) return;
        MPoly term = MPoly::monomial(1, static_cast<std::uint32_t>(p.dinv()),
                                     static_cast<std::uint32_t>(p.area()));
        out.add_term(Partition(std::move(content)), QTRational(term));
    });
    return out;
}

std::map<int, SymFunc> monomial_expansion_refined(const FamilyParams& params) {
    std::map<int, SymFunc> out;
    const int lmax = params.label_max < 0 ? params.positives : params.label_max;
    enumerate_paths(params, [&](const DecoratedPath& p) {
        std::vector<int> content;
        if (!dominant_content(p, lmax, &content)) return;
        MPoly term = MPoly::monomial(1, static_cast<std::uint32_t>(p.dinv()),
                                     static_cast<std::uint32_t>(p.area()));
        auto [it, ins] = out.emplace(p.diagonal_touch(), SymFunc(Basis::Monomial));
        it->second.add_term(Partition(std::move(content)), QTRational(term));
    });
    return out;
}

std::map<int, bool> symmetry_check_refined(const FamilyParams& params, int n_vars) {
    if (n_vars < params.zeros + params.positives)
        throw std::invalid_argument("symmetry_check: n_vars below total size");
    FamilyParams q = params;
    q.label_max = n_vars;
    // exponent vector over x_1..x_nvars -> coefficient, per r
    std::map<int, std::map<std::vector<int>, MPoly>> sums;
    enumerate_paths(q, [&](const DecoratedPath& p) {
        std::vector<int> expv(static_cast<std::size_t>(n_vars), 0);
        for (int v : p.labels)
            if (v > 0) ++expv[static_cast<std::size_t>(v - 1)];
        MPoly term = MPoly::monomial(1, static_cast<std::uint32_t>(p.dinv()),
                                     static_cast<std::uint32_t>(p.area()));
        sums[p.diagonal_touch()][std::move(expv)] += term;
    });
    std::map<int, bool> out;
    for (auto& [r, poly] : sums) {
        bool sym = true;
        for (const auto& [expv, coeff] : poly) {
            for (int i = 0; i + 1 < n_vars && sym; ++i) {
                std::vector<int> swapped = expv;
                std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
                auto it = poly.find(swapped);
                const MPoly other = (it == poly.end()) ? MPoly() : it->second;
                if (other != coeff) sym = false;
            }
            if (!sym) break;
        }
        out[r] = sym;
    }
    return out;
}

bool symmetry_check(const FamilyParams& params, int n_vars) {
    auto per_r = symmetry_check_refined(params, n_vars);
    bool all = true;
    for (const auto& [r, ok] : per_r) all = all && ok;
    return all;
}

PushResult pushing_algorithm(const DecoratedPath& p, const FamilyParams& params) {
    if (params.family != Family::DPeak || params.zeros != 0)
        throw std::invalid_argument("pushing_algorithm: expects the D(n)^{.k,od} family");
    if (!family_contains(params, p))
        throw std::invalid_argument("pushing_algorithm: path not in the stated family");
    const int n = params.positives, d = params.peaks;
    const auto& a = p.path.area_word();

    // decorated-peak rows carry the d biggest labels
    std::vector<int> peak_rows_decorated;
    for (int i = 1; i <= p.size(); ++i)
        if (p.labels[static_cast<std::size_t>(i - 1)] > n - d) peak_rows_decorated.push_back(i);

    PushResult res;
    std::vector<int> delete_rows, push_rows;
    for (int i : peak_rows_decorated) {
        if (a[static_cast<std::size_t>(i - 1)] == 0) {
            delete_rows.push_back(i);
            ++res.removed_peaks;
            if (std::binary_search(p.dv.begin(), p.dv.end(), i)) ++res.removed_decorated;
        } else {
            push_rows.push_back(i);
        }
    }

    // rebuild the step word: walk rows, dropping deleted peaks (N plus their
    // following E) and swapping N<->E for pushed peaks
    const std::string& steps = p.path.steps();
    std::string out_steps;
    std::vector<int> out_labels;
    std::vector<int> out_dv;
    int row = 0;
    int new_row = 0;
    std::vector<int> row_map(static_cast<std::size_t>(p.size()) + 1, 0);
    for (std::size_t idx = 0; idx < steps.size(); ++idx) {
        if (steps[idx] == 'N') {
            ++row;
            bool deleted = std::binary_search(delete_rows.begin(), delete_rows.end(), row);
            bool pushed = std::binary_search(push_rows.begin(), push_rows.end(), row);
            if (deleted) {
                ++idx;  // skip the E step of the peak
                continue;
            }
            if (pushed) {
                out_steps += "EN";
                ++idx;  // consumed the following E
            } else {
                out_steps += 'N';
            }
            ++new_row;
            row_map[static_cast<std::size_t>(row)] = new_row;
            out_labels.push_back(pushed ? 0 : p.labels[static_cast<std::size_t>(row - 1)]);
        } else {
            out_steps += 'E';
        }
    }
    for (int i : p.dv) {
        if (std::binary_search(delete_rows.begin(), delete_rows.end(), i)) continue;
        out_dv.push_back(row_map[static_cast<std::size_t>(i)]);
    }
    std::sort(out_dv.begin(), out_dv.end());

    res.image.path = SquarePath(out_steps);
    res.image.labels = std::move(out_labels);
    res.image.dv = std::move(out_dv);
    return res;
}

}  // namespace qtcomb
