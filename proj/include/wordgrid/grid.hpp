#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wordgrid/rational.hpp"

namespace wordgrid {

using Point = std::vector<long>;

struct Shape {
    std::vector<long> extents;

    explicit Shape(std::vector<long> e);
    int dim() const { return static_cast<int>(extents.size()); }
    long size() const;
    bool operator==(const Shape& o) const { return extents == o.extents; }
};

// A letter assignment on the torus prod_i Z/n_i Z, dense row-major storage.
// Lookups reduce each coordinate mod its extent, so any integer point is a
// valid argument; this is what makes wraparound counting branch-free.
class Grid {
public:
    Grid(Shape shape, std::string cells);
    explicit Grid(const std::string& line);  // 1-D convenience

    const Shape& shape() const { return shape_; }
    long size() const { return static_cast<long>(cells_.size()); }
    int dim() const { return shape_.dim(); }
    const std::string& cells() const { return cells_; }
    std::set<char> alphabet() const;

    char at(const Point& p) const { return cells_[index(p)]; }
    long index(const Point& p) const;  // reduces mod shape
    Point point_at(long index) const;  // row-major inverse

    bool operator==(const Grid& o) const {
        return shape_ == o.shape_ && cells_ == o.cells_;
    }

private:
    Shape shape_;
    std::string cells_;
};

Grid parse_grid(std::istream& in);
Grid parse_grid_file(const std::string& path);
std::string format_grid(const Grid& g);

struct Transform {
    enum Kind { Enlarge, Contract, Reverse, Translate, Swap } kind;
    long i = 0;  // coordinate (Enlarge/Contract/Reverse/Swap)
    long k = 0;  // factor (Enlarge/Contract)
    long j = 0;  // second coordinate (Swap)
    Point t;     // offset (Translate)
};

Grid transform(const Grid& g, const Transform& op);

// Appends a new coordinate of extent 1; triples the count of every
// nontrivial word.
Grid stack(const Grid& g);

struct LetterDistribution {
    std::map<char, Rational> weights;
};

LetterDistribution letter_distribution(const Grid& g);
Rational total_variation(const LetterDistribution& a, const LetterDistribution& b);

long mod(long a, long n);
Point point_at(const Shape& s, long index);

}  // namespace wordgrid
