#pragma once

#include <ostream>

#include "hodgerees/filtration.hpp"

namespace hodgerees {

struct NotOpposed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// rank + c1 w^2 + ch2 w^4 on P^2
struct ChernP2 {
  long rank = 0;
  long c1w2 = 0;
  Rational ch2w4 = 0;

  ChernP2& operator+=(const ChernP2& o) {
    rank += o.rank;
    c1w2 += o.c1w2;
    ch2w4 += o.ch2w4;
    return *this;
  }
  friend ChernP2 operator+(ChernP2 a, const ChernP2& b) { return a += b; }
  friend bool operator==(const ChernP2& a, const ChernP2& b) {
    return a.rank == b.rank && a.c1w2 == b.c1w2 && a.ch2w4 == b.ch2w4;
  }
};

// Classes on the blow-up: d_i on the divisor classes, ch2 on the point class.
struct ChernBlowup {
  long rank = 0;
  long d0 = 0, d1 = 0, d2 = 0;
  Rational ch2w4 = 0;

  ChernBlowup& operator+=(const ChernBlowup& o) {
    rank += o.rank;
    d0 += o.d0;
    d1 += o.d1;
    d2 += o.d2;
    ch2w4 += o.ch2w4;
    return *this;
  }
  friend ChernBlowup operator+(ChernBlowup a, const ChernBlowup& b) { return a += b; }
  friend bool operator==(const ChernBlowup& a, const ChernBlowup& b) {
    return a.rank == b.rank && a.d0 == b.d0 && a.d1 == b.d1 && a.d2 == b.d2 && a.ch2w4 == b.ch2w4;
  }
};

std::ostream& operator<<(std::ostream& os, const ChernP2& c);
std::ostream& operator<<(std::ostream& os, const ChernBlowup& c);

ChernP2 chern_line_p2(long r, long p, long q);
ChernBlowup chern_line_blowup(long r, long p, long q);

template <class T>
ChernBlowup chern_rees_blowup(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

template <class T>
ChernP2 chern_quotient_sheaf(const Filtration<T>& f1, const Filtration<T>& f2);

template <class T>
ChernP2 chern_rees_p2(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

// Throws NotOpposed unless are_opposed(f0, f1, f2).
template <class T>
ChernP2 chern_rees_p2_opposed(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2);

// Table-level forms, for callers that already hold delta and t.
ChernBlowup chern_rees_blowup(size_t dim, const Dims3& delta);
ChernP2 chern_quotient_sheaf(const Dims2& t);
ChernP2 chern_rees_p2(size_t dim, const Dims3& delta, const Dims2& t);
ChernP2 chern_rees_p2_opposed(size_t dim, const Dims3& delta, const Dims2& t);

}  // namespace hodgerees
