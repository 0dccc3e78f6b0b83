#ifndef SECPROJ_IO_HPP
#define SECPROJ_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "secproj/polynomial.hpp"

namespace secproj {

// Grammar: terms joined by + / -; a term is a '*'-separated product of an
// optional coefficient (integer or a/b) and powered variables `name^e`.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            MonomialOrder order = MonomialOrder::grevlex());

// Variable list spec: "x0..x5" range shorthand or a comma list "a,b,c".
std::vector<std::string> parse_variable_spec(const std::string& spec);

struct IdealFile {
    RingPtr ring;
    std::vector<Polynomial> polys;
};

// Format:
//   ring: x0..xr          (or explicit comma list)
//   field: QQ | GF(p)
//   <one polynomial per line>
// '#' starts a comment.
IdealFile read_ideal_stream(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
void write_ideal_stream(std::ostream& out, const RingPtr& ring,
                        const std::vector<Polynomial>& polys);
void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& polys);

}  // namespace secproj

#endif
