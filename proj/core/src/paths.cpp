#include "qtcomb/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qtcomb {

SquarePath::SquarePath(std::string steps) : steps_(std::move(steps)) {
    int n = 0, e = 0;
    for (char c : steps_) {
        if (c == 'N') ++n;
        else if (c == 'E') ++e;
        else throw std::invalid_argument("SquarePath: steps must be 'N'/'E'");
    }
    if (n != e) throw std::invalid_argument("SquarePath: unbalanced steps");
    if (!steps_.empty() && steps_.back() != 'E')
        throw std::invalid_argument("SquarePath: must end with an east step");
    int x = 0, y = 0;
    area_word_.reserve(static_cast<std::size_t>(n));
    for (char c : steps_) {
        if (c == 'N') {
            area_word_.push_back(y - x);
            ++y;
        } else {
            ++x;
        }
    }
    shift_ = 0;
    for (int a : area_word_) shift_ = std::max(shift_, -a);
}

std::vector<int> SquarePath::peak_rows() const {
    std::vector<int> rows;
    int row = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] == 'N') {
            ++row;
            if (i + 1 == steps_.size() || steps_[i + 1] == 'E') rows.push_back(row);
        }
    }
    return rows;
}

std::vector<int> SquarePath::rise_rows() const {
    std::vector<int> rows;
    for (std::size_t i = 1; i < area_word_.size(); ++i)
        if (area_word_[i] > area_word_[i - 1]) rows.push_back(static_cast<int>(i) + 1);
    return rows;
}

int DecoratedPath::zero_count() const {
    return static_cast<int>(std::count(labels.begin(), labels.end(), 0));
}

int DecoratedPath::positive_count() const { return size() - zero_count(); }

bool DecoratedPath::is_valid_labelling() const {
    const auto& a = path.area_word();
    int n = size();
    if (static_cast<int>(labels.size()) != n) return false;
    if (n == 0) return true;
    for (int l : labels)
        if (l < 0) return false;
    for (int i = 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i - 1)] &&
            labels[static_cast<std::size_t>(i)] <= labels[static_cast<std::size_t>(i - 1)])
            return false;
    if (a[0] == 0 && labels[0] == 0) return false;
    int s = path.shift();
    for (int i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] == -s && labels[static_cast<std::size_t>(i)] > 0)
            return true;
    return false;
}

std::vector<int> DecoratedPath::contractible_valleys() const {
    const auto& a = path.area_word();
    std::vector<int> v;
    for (int i = 1; i <= size(); ++i) {
        int ai = a[static_cast<std::size_t>(i - 1)];
        if (i == 1) {
            if (ai < -1 || (ai == -1 && labels[0] > 0)) v.push_back(i);
        } else {
            int prev = a[static_cast<std::size_t>(i - 2)];
            if (ai < prev) v.push_back(i);
            else if (ai == prev &&
                     labels[static_cast<std::size_t>(i - 1)] > labels[static_cast<std::size_t>(i - 2)])
                v.push_back(i);
        }
    }
    return v;
}

bool DecoratedPath::decorations_valid() const {
    std::vector<int> v = contractible_valleys();
    for (int i : dv)
        if (!std::binary_search(v.begin(), v.end(), i)) return false;
    std::vector<int> rises = path.rise_rows();
    for (int i : dr)
        if (!std::binary_search(rises.begin(), rises.end(), i)) return false;
    return true;
}

bool DecoratedPath::has_free_base_label() const {
    const auto& a = path.area_word();
    int s = path.shift();
    for (int i = 1; i <= size(); ++i) {
        if (a[static_cast<std::size_t>(i - 1)] == -s &&
            labels[static_cast<std::size_t>(i - 1)] > 0 &&
            !std::binary_search(dv.begin(), dv.end(), i))
            return true;
    }
    return false;
}

int DecoratedPath::area() const {
    const auto& a = path.area_word();
    int s = path.shift();
    int total = 0;
    for (int i = 1; i <= size(); ++i) {
        if (std::binary_search(dr.begin(), dr.end(), i)) continue;
        total += a[static_cast<std::size_t>(i - 1)] + s;
    }
    return total;
}

DinvBreakdown DecoratedPath::dinv_breakdown() const {
    const auto& a = path.area_word();
    int n = size();
    DinvBreakdown b;
    b.decorated = static_cast<int>(dv.size());
    for (int i = 1; i <= n; ++i) {
        if (std::binary_search(dv.begin(), dv.end(), i)) continue;
        for (int j = i + 1; j <= n; ++j) {
            int ai = a[static_cast<std::size_t>(i - 1)], aj = a[static_cast<std::size_t>(j - 1)];
            int wi = labels[static_cast<std::size_t>(i - 1)], wj = labels[static_cast<std::size_t>(j - 1)];
            if (ai == aj && wi < wj) ++b.primary;
            else if (ai == aj + 1 && wi > wj) ++b.secondary;
        }
    }
    for (int i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] < 0 && labels[static_cast<std::size_t>(i)] > 0) ++b.bonus;
    return b;
}

std::vector<int> DecoratedPath::reading_word() const {
    const auto& a = path.area_word();
    std::vector<int> rows(static_cast<std::size_t>(size()));
    std::iota(rows.begin(), rows.end(), 1);
    std::stable_sort(rows.begin(), rows.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i - 1)] < a[static_cast<std::size_t>(j - 1)];
    });
    std::vector<int> word;
    word.reserve(rows.size());
    for (int i : rows) word.push_back(labels[static_cast<std::size_t>(i - 1)]);
    return word;
}

int DecoratedPath::diagonal_touch() const {
    const auto& a = path.area_word();
    int s = path.shift();
    int r = 0;
    for (int i = 1; i <= size(); ++i) {
        if (a[static_cast<std::size_t>(i - 1)] == -s &&
            labels[static_cast<std::size_t>(i - 1)] > 0 &&
            !std::binary_search(dv.begin(), dv.end(), i))
            ++r;
    }
    return r;
}

std::string DecoratedPath::to_json_string(const std::string& family) const {
    nlohmann::json j;
    j["steps"] = path.steps();
    j["labels"] = labels;
    j["dv"] = dv;
    j["dr"] = dr;
    if (!family.empty()) j["family"] = family;
    return j.dump();
}

DecoratedPath DecoratedPath::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DecoratedPath p;
    p.path = SquarePath(j.at("steps").get<std::string>());
    p.labels = j.value("labels", std::vector<int>{});
    if (p.labels.empty() && p.path.size() > 0)
        throw std::invalid_argument("DecoratedPath: missing labels");
    p.dv = j.value("dv", std::vector<int>{});
    p.dr = j.value("dr", std::vector<int>{});
    std::sort(p.dv.begin(), p.dv.end());
    std::sort(p.dr.begin(), p.dr.end());
    return p;
}

}  // namespace qtcomb
