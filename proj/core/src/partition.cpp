#include "qtcomb/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtcomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition();
    conj.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::vector<Partition::Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j)
            out.push_back(Cell{i, j});
    return out;
}

int Partition::arm(Cell c) const { return part(c.row) - c.col - 1; }

int Partition::leg(Cell c) const {
    int l = 0;
    for (int i = c.row + 1; i < length(); ++i)
        if (parts_[static_cast<std::size_t>(i)] > c.col) ++l;
    return l;
}

int Partition::n_stat() const {
    int n = 0;
    for (int i = 0; i < length(); ++i) n += i * parts_[static_cast<std::size_t>(i)];
    return n;
}

Int Partition::z_factor() const {
    Int z(1);
    int run = 0;
    for (int i = 0; i < length(); ++i) {
        int p = parts_[static_cast<std::size_t>(i)];
        ++run;
        z *= p;
        if (i + 1 == length() || parts_[static_cast<std::size_t>(i + 1)] != p) {
            for (int m = 2; m <= run; ++m) z *= m;
            run = 0;
        }
    }
    return z;
}

bool Partition::dominated_by(const Partition& other) const {
    if (size() != other.size())
        throw std::invalid_argument("dominated_by: sizes differ");
    int a = 0, b = 0;
    int len = std::max(length(), other.length());
    for (int i = 0; i < len; ++i) {
        a += part(i);
        b += other.part(i);
        if (a > b) return false;
    }
    return true;
}

static void gen_partitions(int n, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> Partition::all(int n) {
    if (n < 0) throw std::invalid_argument("Partition::all: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < length(); ++i) {
        if (i) os << ",";
        os << parts_[static_cast<std::size_t>(i)];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("Partition::parse: expected '['");
    ++i;
    std::vector<int> parts;
    skip();
    while (i < text.size() && text[i] != ']') {
        int v = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
            any = true;
        }
        if (!any) throw std::invalid_argument("Partition::parse: expected integer");
        parts.push_back(v);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        }
    }
    if (i >= text.size()) throw std::invalid_argument("Partition::parse: expected ']'");
    return Partition(std::move(parts));
}

}  // namespace qtcomb
