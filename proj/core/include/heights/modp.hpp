#pragma once

#include <cstdint>
#include <vector>

#include "heights/intpoly.hpp"

namespace heights::modp {

using u64 = std::uint64_t;

// Dense polynomial over F_p, coefficient of t^i at index i, no trailing zeros.
using Poly = std::vector<u64>;

u64 add(u64 a, u64 b, u64 p);
u64 sub(u64 a, u64 b, u64 p);
u64 mul(u64 a, u64 b, u64 p);
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

Poly reduce(const IntPoly& f, u64 p);
void normalize(Poly& f);
int degree(const Poly& f);
Poly make_monic(const Poly& f, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic
Poly derivative(const Poly& f, u64 p);
// a^e mod f, with e an arbitrary-precision exponent.
Poly powmod(const Poly& a, const Int& e, const Poly& f, u64 p);

// Monic irreducible factors of a squarefree monic polynomial over F_p.
// Deterministically seeded; output sorted for reproducibility.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p);

}  // namespace heights::modp
