#include "wordgrid/grid.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "wordgrid/errors.hpp"

namespace wordgrid {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

Shape::Shape(std::vector<long> e) : extents(std::move(e)) {
    if (extents.empty())
        throw ShapeError("shape needs at least one coordinate");
    long total = 1;
    for (long n : extents) {
        if (n < 1)
            throw ShapeError("extents must be positive");
        if (total > 100000000 / n)
            throw ShapeError("grid size cap (1e8 cells) exceeded");
        total *= n;
    }
}

long Shape::size() const {
    long total = 1;
    for (long n : extents)
        total *= n;
    return total;
}

Grid::Grid(Shape shape, std::string cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    if (static_cast<long>(cells_.size()) != shape_.size())
        throw ShapeError("cell count does not match shape");
}

Grid::Grid(const std::string& line) : Grid(Shape({static_cast<long>(line.size())}), line) {}

std::set<char> Grid::alphabet() const {
    return std::set<char>(cells_.begin(), cells_.end());
}

long Grid::index(const Point& p) const {
    if (static_cast<int>(p.size()) != dim())
        throw DimensionMismatchError("point dimension does not match grid");
    long idx = 0;
    for (int i = 0; i < dim(); ++i)
        idx = idx * shape_.extents[i] + mod(p[i], shape_.extents[i]);
    return idx;
}

Point point_at(const Shape& s, long index) {
    Point p(s.dim());
    for (int i = s.dim() - 1; i >= 0; --i) {
        p[i] = index % s.extents[i];
        index /= s.extents[i];
    }
    return p;
}

Point Grid::point_at(long index) const {
    return wordgrid::point_at(shape_, index);
}

Grid parse_grid(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("missing grid header");
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "shape:")
        throw ParseError("grid header must start with 'shape:'");
    std::vector<long> extents;
    long n;
    while (hs >> n)
        extents.push_back(n);
    if (extents.empty())
        throw ParseError("grid header lists no extents");

    Shape shape{extents};
    const int d = shape.dim();
    const long row_len = extents[d - 1];
    const long rows_per_block = d >= 2 ? extents[d - 2] : 1;
    const long blocks = shape.size() / (row_len * rows_per_block);

    std::string cells;
    cells.reserve(shape.size());
    std::string line;
    for (long b = 0; b < blocks; ++b) {
        if (b > 0) {
            if (!std::getline(in, line) || !line.empty())
                throw ParseError("expected blank line between grid blocks");
        }
        for (long r = 0; r < rows_per_block; ++r) {
            if (!std::getline(in, line))
                throw ParseError("grid ends early");
            if (static_cast<long>(line.size()) != row_len)
                throw ParseError("grid row has wrong length");
            cells += line;
        }
    }
    if (std::getline(in, line) && !line.empty())
        throw ParseError("trailing content after grid");
    return Grid(shape, cells);
}

Grid parse_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open grid file: " + path);
    return parse_grid(in);
}

std::string format_grid(const Grid& g) {
    std::ostringstream out;
    out << "shape:";
    for (long n : g.shape().extents)
        out << ' ' << n;
    out << '\n';
    const int d = g.dim();
    const long row_len = g.shape().extents[d - 1];
    const long rows_per_block = d >= 2 ? g.shape().extents[d - 2] : 1;
    const long block_len = row_len * rows_per_block;
    const std::string& cells = g.cells();
    for (long i = 0; i < g.size(); i += row_len) {
        if (i > 0 && i % block_len == 0)
            out << '\n';
        out << cells.substr(i, row_len) << '\n';
    }
    return out.str();
}

Grid transform(const Grid& g, const Transform& op) {
    const int d = g.dim();
    auto check_coord = [&](long i) {
        if (i < 0 || i >= d)
            throw IndexOutOfRangeError("coordinate out of range");
    };
    std::vector<long> ext = g.shape().extents;

    // Builds the result by pulling each new cell from a point of g.
    auto rebuild = [&](const Shape& ns, auto&& source_point) {
        std::string cells(ns.size(), '?');
        for (long idx = 0; idx < ns.size(); ++idx)
            cells[idx] = g.at(source_point(point_at(ns, idx)));
        return Grid(ns, cells);
    };

    switch (op.kind) {
        case Transform::Enlarge: {
            check_coord(op.i);
            if (op.k < 1)
                throw IndexOutOfRangeError("enlarge factor must be >= 1");
            ext[op.i] *= op.k;
            return rebuild(Shape{ext}, [](Point p) { return p; });
        }
        case Transform::Contract: {
            check_coord(op.i);
            if (op.k < 1 || ext[op.i] % op.k != 0)
                throw IndexOutOfRangeError("contract factor must divide the extent");
            const long period = ext[op.i] / op.k;
            for (long idx = 0; idx < g.size(); ++idx) {
                Point p = g.point_at(idx);
                Point q = p;
                q[op.i] += period;
                if (g.at(p) != g.at(q))
                    throw NotPeriodicError("grid is not periodic in the contracted coordinate");
            }
            ext[op.i] = period;
            return rebuild(Shape{ext}, [](Point p) { return p; });
        }
        case Transform::Reverse: {
            check_coord(op.i);
            return rebuild(Shape{ext}, [&](Point p) {
                p[op.i] = -p[op.i];
                return p;
            });
        }
        case Transform::Translate: {
            if (static_cast<int>(op.t.size()) != d)
                throw DimensionMismatchError("translation vector dimension mismatch");
            return rebuild(Shape{ext}, [&](Point p) {
                for (int c = 0; c < d; ++c)
                    p[c] += op.t[c];
                return p;
            });
        }
        case Transform::Swap: {
            check_coord(op.i);
            check_coord(op.j);
            std::swap(ext[op.i], ext[op.j]);
            return rebuild(Shape{ext}, [&](Point p) {
                std::swap(p[op.i], p[op.j]);
                return p;
            });
        }
    }
    throw Error("unreachable");
}

Grid stack(const Grid& g) {
    std::vector<long> ext = g.shape().extents;
    ext.push_back(1);
    return Grid(Shape{ext}, g.cells());
}

LetterDistribution letter_distribution(const Grid& g) {
    std::map<char, long> counts;
    for (char c : g.cells())
        ++counts[c];
    LetterDistribution h;
    for (auto [c, n] : counts)
        h.weights[c] = frac(n, g.size());
    return h;
}

Rational total_variation(const LetterDistribution& a, const LetterDistribution& b) {
    Rational sum = 0;
    std::set<char> keys;
    for (auto& [c, q] : a.weights)
        keys.insert(c);
    for (auto& [c, q] : b.weights)
        keys.insert(c);
    for (char c : keys) {
        Rational va = 0, vb = 0;
        if (auto it = a.weights.find(c); it != a.weights.end())
            va = it->second;
        if (auto it = b.weights.find(c); it != b.weights.end())
            vb = it->second;
        sum += abs(va - vb);
    }
    return sum / 2;
}

}  // namespace wordgrid
