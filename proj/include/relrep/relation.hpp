// Copyright 2026 the relrep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELREP_RELATION_HPP_
#define RELREP_RELATION_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace relrep {

  // Largest supported base set; one row of a relation is one machine word.
  inline constexpr std::size_t max_base_size = 32;

  using Point    = std::uint32_t;
  using PointSet = std::uint32_t;  // bit x set <=> point x is a member

  // A binary relation on {0, ..., m-1} stored as m row bitsets: bit y of row x
  // is set iff (x, y) is in the relation. Rows beyond m are always zero.
  class Relation {
   public:
    using Row = std::uint32_t;

    explicit Relation(std::size_t base_size = 1) : _m(base_size), _rows{} {
      if (base_size == 0 || base_size > max_base_size) {
        throw Error(ErrorKind::invalid_argument,
                    "base size must be in 1.." + std::to_string(max_base_size)
                        + ", got " + std::to_string(base_size));
      }
    }

    static Relation empty(std::size_t m) {
      return Relation(m);
    }

    static Relation identity(std::size_t m) {
      Relation r(m);
      for (std::size_t x = 0; x < m; ++x) {
        r._rows[x] = Row(1) << x;
      }
      return r;
    }

    static Relation full(std::size_t m) {
      Relation r(m);
      for (std::size_t x = 0; x < m; ++x) {
        r._rows[x] = r.row_mask();
      }
      return r;
    }

    static Relation from_pairs(std::size_t                           m,
                               std::span<std::pair<Point, Point> const> ps) {
      Relation r(m);
      for (auto [x, y] : ps) {
        r.insert(x, y);
      }
      return r;
    }

    static Relation from_pairs(std::size_t                                m,
                               std::initializer_list<std::pair<Point, Point>> ps) {
      Relation r(m);
      for (auto [x, y] : ps) {
        r.insert(x, y);
      }
      return r;
    }

    // Inverse of code(): bit x*m + y of `code` is the pair (x, y).
    static Relation from_code(std::size_t m, std::uint64_t code) {
      Relation r(m);
      if (m * m > 64) {
        throw Error(ErrorKind::invalid_argument,
                    "relation codes only exist for base size <= 8");
      }
      for (std::size_t x = 0; x < m; ++x) {
        r._rows[x] = static_cast<Row>((code >> (x * m)) & r.row_mask());
      }
      return r;
    }

    std::size_t base_size() const noexcept {
      return _m;
    }

    Row row(std::size_t x) const noexcept {
      return _rows[x];
    }

    void set_row(std::size_t x, Row bits) noexcept {
      _rows[x] = bits & row_mask();
    }

    bool contains(Point x, Point y) const noexcept {
      return ((_rows[x] >> y) & 1u) != 0;
    }

    void insert(Point x, Point y) {
      check_point(x);
      check_point(y);
      _rows[x] |= Row(1) << y;
    }

    void erase(Point x, Point y) {
      check_point(x);
      check_point(y);
      _rows[x] &= ~(Row(1) << y);
    }

    bool is_empty() const noexcept {
      for (std::size_t x = 0; x < _m; ++x) {
        if (_rows[x] != 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (std::size_t x = 0; x < _m; ++x) {
        c += static_cast<std::size_t>(std::popcount(_rows[x]));
      }
      return c;
    }

    // Row-major sorted pairs.
    std::vector<std::pair<Point, Point>> pairs() const {
      std::vector<std::pair<Point, Point>> out;
      for (Point x = 0; x < _m; ++x) {
        for (Point y = 0; y < _m; ++y) {
          if (contains(x, y)) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

    bool is_subset_of(Relation const& other) const noexcept {
      for (std::size_t x = 0; x < _m; ++x) {
        if ((_rows[x] & ~other._rows[x]) != 0) {
          return false;
        }
      }
      return true;
    }

    PointSet domain() const noexcept {
      PointSet d = 0;
      for (std::size_t x = 0; x < _m; ++x) {
        if (_rows[x] != 0) {
          d |= PointSet(1) << x;
        }
      }
      return d;
    }

    PointSet range() const noexcept {
      PointSet r = 0;
      for (std::size_t x = 0; x < _m; ++x) {
        r |= _rows[x];
      }
      return r;
    }

    // Bitstring with (x, y) at bit x*m + y; only for base size <= 8.
    std::uint64_t code() const {
      if (_m * _m > 64) {
        throw Error(ErrorKind::invalid_argument,
                    "relation codes only exist for base size <= 8");
      }
      std::uint64_t c = 0;
      for (std::size_t x = 0; x < _m; ++x) {
        c |= static_cast<std::uint64_t>(_rows[x]) << (x * _m);
      }
      return c;
    }

    std::size_t hash() const noexcept {
      std::size_t h = _m;
      for (std::size_t x = 0; x < _m; ++x) {
        h = h * 0x9E3779B97F4A7C15ull + _rows[x];
        h ^= h >> 29;
      }
      return h;
    }

    bool operator==(Relation const& other) const noexcept {
      return _m == other._m && _rows == other._rows;
    }

    // Canonical order: base size, then row-major bit order read as a number
    // (so for small bases it agrees with code()).
    bool operator<(Relation const& other) const noexcept {
      if (_m != other._m) {
        return _m < other._m;
      }
      for (std::size_t x = _m; x-- > 0;) {
        if (_rows[x] != other._rows[x]) {
          return _rows[x] < other._rows[x];
        }
      }
      return false;
    }

    Row row_mask() const noexcept {
      return _m == 32 ? ~Row(0) : ((Row(1) << _m) - 1);
    }

   private:
    void check_point(Point p) const {
      if (p >= _m) {
        throw Error(ErrorKind::invalid_argument,
                    "point " + std::to_string(p) + " outside base of size "
                        + std::to_string(_m));
      }
    }

    std::size_t                          _m;
    std::array<Row, max_base_size>       _rows;
  };

  struct RelationHash {
    std::size_t operator()(Relation const& r) const noexcept {
      return r.hash();
    }
  };

  namespace detail {
    inline void same_base(Relation const& r, Relation const& s) {
      if (r.base_size() != s.base_size()) {
        throw Error(ErrorKind::base_mismatch,
                    "base sizes " + std::to_string(r.base_size()) + " and "
                        + std::to_string(s.base_size()));
      }
    }
  }  // namespace detail

  // Relational composition: (x, y) iff some z has (x, z) in r and (z, y) in s.
  inline Relation compose_rel(Relation const& r, Relation const& s) {
    detail::same_base(r, s);
    std::size_t const m = r.base_size();
    Relation          out(m);
    for (std::size_t x = 0; x < m; ++x) {
      Relation::Row mid = r.row(x);
      Relation::Row acc = 0;
      while (mid != 0) {
        auto z = static_cast<std::size_t>(std::countr_zero(mid));
        acc |= s.row(z);
        mid &= mid - 1;
      }
      out.set_row(x, acc);
    }
    return out;
  }

  inline Relation meet_rel(Relation const& r, Relation const& s) {
    detail::same_base(r, s);
    Relation out(r.base_size());
    for (std::size_t x = 0; x < r.base_size(); ++x) {
      out.set_row(x, r.row(x) & s.row(x));
    }
    return out;
  }

  inline Relation join_rel(Relation const& r, Relation const& s) {
    detail::same_base(r, s);
    Relation out(r.base_size());
    for (std::size_t x = 0; x < r.base_size(); ++x) {
      out.set_row(x, r.row(x) | s.row(x));
    }
    return out;
  }

  // universe \ r; r must lie inside the universe.
  inline Relation complement_rel(Relation const& r, Relation const& universe) {
    detail::same_base(r, universe);
    if (!r.is_subset_of(universe)) {
      throw Error(ErrorKind::universe_violation,
                  "relation is not contained in the complement universe");
    }
    Relation out(r.base_size());
    for (std::size_t x = 0; x < r.base_size(); ++x) {
      out.set_row(x, universe.row(x) & ~r.row(x));
    }
    return out;
  }

  inline Relation converse_rel(Relation const& r) {
    std::size_t const m = r.base_size();
    Relation          out(m);
    for (Point x = 0; x < m; ++x) {
      for (Point y = 0; y < m; ++y) {
        if (r.contains(x, y)) {
          out.insert(y, x);
        }
      }
    }
    return out;
  }

  // r r^ <= id and r^ r <= id.
  inline bool is_injective_partial_function(Relation const& r) {
    auto const id = Relation::identity(r.base_size());
    auto const cv = converse_rel(r);
    return compose_rel(r, cv).is_subset_of(id)
           && compose_rel(cv, r).is_subset_of(id);
  }

  inline bool is_symmetric(Relation const& r) {
    return converse_rel(r) == r;
  }

  inline bool is_transitive(Relation const& r) {
    return compose_rel(r, r).is_subset_of(r);
  }

  // Reflexive on every base point, symmetric and transitive.
  inline bool is_equivalence(Relation const& r) {
    return Relation::identity(r.base_size()).is_subset_of(r)
           && is_symmetric(r) && is_transitive(r);
  }

  // Symmetric, transitive, and reflexive on every point that occurs in r.
  inline bool is_equivalence_on_domain(Relation const& r) {
    if (!is_symmetric(r) || !is_transitive(r)) {
      return false;
    }
    PointSet const field = r.domain() | r.range();
    for (Point x = 0; x < r.base_size(); ++x) {
      if (((field >> x) & 1u) != 0 && !r.contains(x, x)) {
        return false;
      }
    }
    return true;
  }

  // Every ordered pair over `points` is in r.
  inline bool acts_universally(Relation const& r, std::span<Point const> points) {
    for (auto x : points) {
      for (auto y : points) {
        if (x >= r.base_size() || y >= r.base_size()) {
          throw Error(ErrorKind::invalid_argument,
                      "point outside the base set");
        }
        if (!r.contains(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool acts_universally(Relation const&               r,
                               std::initializer_list<Point> points) {
    return acts_universally(
        r, std::span<Point const>(points.begin(), points.size()));
  }

  // {(x, y) : (x, y) in r and (y, x) in r}
  inline Relation symmetric_interior(Relation const& r) {
    return meet_rel(r, converse_rel(r));
  }

}  // namespace relrep

template <>
struct std::hash<relrep::Relation> {
  std::size_t operator()(relrep::Relation const& r) const noexcept {
    return r.hash();
  }
};

#endif  // RELREP_RELATION_HPP_
