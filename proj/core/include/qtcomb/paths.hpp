#pragma once

#include <string>
#include <vector>

#include "qtcomb/mpoly.hpp"

namespace qtcomb {

// Lattice path from (0,0) to (n,n) over steps N/E, always ending with E.
class SquarePath {
public:
    SquarePath() = default;
    explicit SquarePath(std::string steps);  // validates

    const std::string& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()) / 2; }

    // a_i = diagonal of the i-th vertical step's starting point (1-based rows)
    const std::vector<int>& area_word() const { return area_word_; }
    int shift() const { return shift_; }
    bool is_dyck() const { return shift_ == 0; }
    // rows whose N step is immediately followed by an E step
    std::vector<int> peak_rows() const;
    // rows i >= 2 with a_i > a_{i-1}
    std::vector<int> rise_rows() const;

    friend bool operator==(const SquarePath&, const SquarePath&) = default;
    friend bool operator<(const SquarePath& a, const SquarePath& b) { return a.steps_ < b.steps_; }

private:
    std::string steps_;
    std::vector<int> area_word_;
    int shift_ = 0;
};

struct DinvBreakdown {
    int primary = 0;
    int secondary = 0;
    int bonus = 0;
    int decorated = 0;  // subtracted
    int total() const { return primary + secondary + bonus - decorated; }
};

// Square path with a partial labelling plus decorated-valley and
// decorated-rise sets (1-based row indices, sorted).
struct DecoratedPath {
    SquarePath path;
    std::vector<int> labels;  // labels[i-1] = w_i, 0 = zero label
    std::vector<int> dv;
    std::vector<int> dr;

    int size() const { return path.size(); }
    int zero_count() const;
    int positive_count() const;

    bool is_valid_labelling() const;
    std::vector<int> contractible_valleys() const;
    bool decorations_valid() const;  // dv within contractible valleys, dr within rises
    // LSQ'-family condition: a positive label on the base diagonal whose row
    // is not a decorated valley
    bool has_free_base_label() const;

    int area() const;  // sum over rows not in dr of (a_i + shift)
    DinvBreakdown dinv_breakdown() const;
    int dinv() const { return dinv_breakdown().total(); }
    std::vector<int> reading_word() const;
    // r statistic: positive-labelled rows at height 0 not in dv
    int diagonal_touch() const;

    std::string to_json_string(const std::string& family = "") const;
    static DecoratedPath from_json_string(const std::string& text);

    friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;
};

}  // namespace qtcomb
