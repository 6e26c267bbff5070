#include "hodgerees/rees_chern.hpp"

namespace hodgerees {

std::ostream& operator<<(std::ostream& os, const ChernP2& c) {
  return os << "(rank " << c.rank << ", c1 " << c.c1w2 << ", ch2 " << c.ch2w4 << ")";
}

std::ostream& operator<<(std::ostream& os, const ChernBlowup& c) {
  return os << "(rank " << c.rank << ", d " << c.d0 << "," << c.d1 << "," << c.d2 << ", ch2 " << c.ch2w4 << ")";
}

namespace {
Rational half(long v) {
  Rational q(mpz_class(v), mpz_class(2));
  q.canonicalize();
  return q;
}
}  // namespace

ChernP2 chern_line_p2(long r, long p, long q) {
  long s = r + p + q;
  return {1, s, half(s * s)};
}

ChernBlowup chern_line_blowup(long r, long p, long q) {
  return {1, r, p, q, half(r * r + 2 * r * p + 2 * r * q)};
}

ChernBlowup chern_rees_blowup(size_t dim, const Dims3& delta) {
  ChernBlowup out;
  for (auto const& [k, v] : delta.entries) {
    ChernBlowup line = chern_line_blowup(k[2], k[0], k[1]);
    out.d0 += v * line.d0;
    out.d1 += v * line.d1;
    out.d2 += v * line.d2;
    out.ch2w4 += v * line.ch2w4;
  }
  out.rank = long(dim);
  return out;
}

ChernP2 chern_quotient_sheaf(const Dims2& t) {
  long s = 0;
  for (auto const& [k, v] : t.entries) s += v * (k[0] + k[1]) * (k[0] + k[1]);
  return {0, 0, half(s)};
}

ChernP2 chern_rees_p2(size_t dim, const Dims3& delta, const Dims2& t) {
  ChernBlowup b = chern_rees_blowup(dim, delta);
  ChernP2 out{long(dim), 0, b.ch2w4 + chern_quotient_sheaf(t).ch2w4};
  for (auto const& [k, v] : delta.entries) out.c1w2 += v * (k[0] + k[1] + k[2]);
  return out;
}

ChernP2 chern_rees_p2_opposed(size_t dim, const Dims3& delta, const Dims2& t) {
  for (auto const& [k, v] : delta.entries)
    if (k[0] + k[1] + k[2] != 0)
      throw NotOpposed("filtrations are not opposed: delta(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                       std::to_string(k[2]) + ") = " + std::to_string(v));
  long s = 0;
  for (auto const& [k, v] : t.entries) s += v * (k[0] + k[1]) * (k[0] + k[1]);
  for (auto const& [k, v] : delta.entries) s -= v * (k[0] + k[1]) * (k[0] + k[1]);
  return {long(dim), 0, half(s)};
}

template <class T>
ChernBlowup chern_rees_blowup(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  return chern_rees_blowup(f0.ambient_dim(), triple_graded_dims(f0, f1, f2));
}

template <class T>
ChernP2 chern_quotient_sheaf(const Filtration<T>& f1, const Filtration<T>& f2) {
  return chern_quotient_sheaf(double_graded_dims(f1, f2));
}

template <class T>
ChernP2 chern_rees_p2(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  return chern_rees_p2(f0.ambient_dim(), triple_graded_dims(f0, f1, f2), double_graded_dims(f1, f2));
}

template <class T>
ChernP2 chern_rees_p2_opposed(const Filtration<T>& f0, const Filtration<T>& f1, const Filtration<T>& f2) {
  return chern_rees_p2_opposed(f0.ambient_dim(), triple_graded_dims(f0, f1, f2), double_graded_dims(f1, f2));
}

#define HODGEREES_INSTANTIATE(T)                                                                                \
  template ChernBlowup chern_rees_blowup(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);     \
  template ChernP2 chern_quotient_sheaf(const Filtration<T>&, const Filtration<T>&);                            \
  template ChernP2 chern_rees_p2(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);             \
  template ChernP2 chern_rees_p2_opposed(const Filtration<T>&, const Filtration<T>&, const Filtration<T>&);

HODGEREES_INSTANTIATE(GaussianRational)
HODGEREES_INSTANTIATE(Complex)

}  // namespace hodgerees
