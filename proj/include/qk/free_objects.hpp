#ifndef QK_FREE_OBJECTS_HPP_
#define QK_FREE_OBJECTS_HPP_

#include <string>
#include <vector>

#include "qk/dyadic.hpp"
#include "qk/loc_laurent.hpp"
#include "qk/term.hpp"

namespace qk {

enum class Variety { kMLQnd, kMCQnd };

// Coordinates of the free objects on a generator list with a chosen
// basepoint: the basepoint is the origin and the remaining generators, in
// declared order, are the standard basis vectors 1..n-1.
class FreeFrame {
 public:
  FreeFrame(GeneratorList gens, std::size_t basepoint);
  FreeFrame(GeneratorList gens, std::string_view basepoint_name);

  const GeneratorList& generators() const { return gens_; }
  std::size_t basepoint() const { return basepoint_; }
  std::size_t dimension() const { return gens_.size() - 1; }

  // Coordinate slot of generator i, or -1 for the basepoint.
  long slot(std::size_t generator) const;

 private:
  GeneratorList gens_;
  std::size_t basepoint_;
};

// Points of Alex(L^{n-1}, t) and (D^{n-1})_mid.
using AffinePointL = std::vector<LocLaurent>;
using AffinePointD = std::vector<Dyadic>;

// mul(x, y) = t x + (1-t) y; ldiv(x, y) = (1-t)^{-1} (y - t x);
// rdiv(y, x) = t^{-1} (y - (1-t) x).
AffinePointL eval_fml(const Term& term, const FreeFrame& frame);

// mul(x, y) = (x + y)/2; ldiv(x, y) = 2y - x; rdiv(y, x) = 2y - x.
AffinePointD eval_fmc(const Term& term, const FreeFrame& frame);

// Coordinatewise t -> 1/2.
AffinePointD specialize_point(const AffinePointL& p);

// Decides equality of two words in the free medial Latin (kMLQnd) or free
// medial commutative (kMCQnd) quandle on the frame's generators.
bool words_equal(const Term& lhs, const Term& rhs, Variety variety, const FreeFrame& frame);

std::string to_string(const AffinePointL& p);
std::string to_string(const AffinePointD& p);

}  // namespace qk

#endif  // QK_FREE_OBJECTS_HPP_
