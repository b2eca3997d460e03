#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qtcomb/mpoly.hpp"

namespace qtcomb {

// Integer partition with the cell geometry driving Macdonald eigenvalues.
// Cells are (row, col), 0-based, row lengths weakly decreasing.
class Partition {
public:
    struct Cell {
        int row, col;
    };

    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates

    const std::vector<int>& parts() const { return parts_; }
    int size() const;        // |mu|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;   // 0-based; 0 beyond length

    Partition conjugate() const;
    std::vector<Cell> cells() const;
    int arm(Cell c) const;     // cells strictly right
    int leg(Cell c) const;     // cells strictly above
    int coarm(Cell c) const { return c.col; }
    int coleg(Cell c) const { return c.row; }
    int n_stat() const;        // n(mu) = sum of colegs

    Int z_factor() const;      // z_mu = prod i^{m_i} m_i!

    // dominance order (requires equal size): true iff *this <= other
    bool dominated_by(const Partition& other) const;

    static std::vector<Partition> all(int n);  // descending lex, (n) first

    std::string str() const;  // "[3,1,1]"; "[]" for the empty partition
    static Partition parse(std::string_view text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

}  // namespace qtcomb
