#ifndef FULAT_IO_HPP
#define FULAT_IO_HPP

#include <iosfwd>
#include <string>

#include "fulat/constructions.hpp"
#include "fulat/enumerators.hpp"
#include "fulat/f2.hpp"
#include "fulat/theta.hpp"
#include "fulat/z4.hpp"

namespace fulat::io {

// Text formats, one record per stream.  Headers:
//   Z4 <n> <k1> <k2>      then k1+k2 rows of n digits in {0,1,2,3}
//   F2 <n> <k>            then k rows of n bits
//   SWE <n> <mass>        then sorted "<coeff> <i> <j> <k>" term lines
//   WE <n> <mass>         then sorted "<coeff> <i> <j>" term lines
//   JWE <n> <mass>        then sorted "<coeff> <d00> <d01> <d10> <d11>" lines
//   QEXP <n> <maxNorm4>   then "<norm4> <count>" lines, norms ascending
//   LATTICE <n> <vol>     then n rows of n exact rationals "p/q"
// Non-standard-form Z4 rows are accepted and normalized on read.

z4::Code read_z4_code(std::istream& in);
void write_z4_code(std::ostream& out, const z4::Code& code);

f2::Code read_f2_code(std::istream& in);
void write_f2_code(std::ostream& out, const f2::Code& code);

SwePolynomial read_swe(std::istream& in);
void write_swe(std::ostream& out, const SwePolynomial& p);

WePolynomial read_we(std::istream& in);
void write_we(std::ostream& out, const WePolynomial& p);

JwePolynomial read_jwe(std::istream& in);
void write_jwe(std::ostream& out, const JwePolynomial& p);

theta::QExpansion read_qexp(std::istream& in);
void write_qexp(std::ostream& out, const theta::QExpansion& q);

void write_lattice(std::ostream& out, const LatticeDescriptor& lat);

// First whitespace-separated token of the stream ("Z4", "F2", "SWE", ...);
// the stream is left positioned after that token.
std::string peek_format(std::istream& in);

}  // namespace fulat::io

#endif
