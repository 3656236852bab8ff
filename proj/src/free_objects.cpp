#include "qk/free_objects.hpp"

namespace qk {
namespace {

template <class Ring>
std::vector<Ring> leaf(const FreeFrame& frame, std::size_t generator) {
  std::vector<Ring> p(frame.dimension());
  if (long s = frame.slot(generator); s >= 0) p[static_cast<std::size_t>(s)] = Ring(1);
  return p;
}

// a*x + b*y, coordinatewise.
template <class Ring>
std::vector<Ring> combine(const Ring& a, const std::vector<Ring>& x, const Ring& b,
                          const std::vector<Ring>& y) {
  std::vector<Ring> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

}  // namespace

FreeFrame::FreeFrame(GeneratorList gens, std::size_t basepoint)
    : gens_(std::move(gens)), basepoint_(basepoint) {
  if (basepoint_ >= gens_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "basepoint index out of range");
  }
}

FreeFrame::FreeFrame(GeneratorList gens, std::string_view basepoint_name)
    : FreeFrame(gens, gens.index_of(basepoint_name)) {}

long FreeFrame::slot(std::size_t generator) const {
  if (generator == basepoint_) return -1;
  return static_cast<long>(generator < basepoint_ ? generator : generator - 1);
}

AffinePointL eval_fml(const Term& term, const FreeFrame& frame) {
  static const LocLaurent t = LocLaurent::t();
  static const LocLaurent s = LocLaurent::one_minus_t();
  static const LocLaurent t_inv = t.inverse();
  static const LocLaurent s_inv = s.inverse();
  switch (term.kind()) {
    case Term::Kind::kGenerator: return leaf<LocLaurent>(frame, term.generator_index());
    case Term::Kind::kMul:
      return combine(t, eval_fml(term.left(), frame), s, eval_fml(term.right(), frame));
    case Term::Kind::kLeftDiv: {
      // (1-t)^{-1} y - t (1-t)^{-1} x
      auto x = eval_fml(term.left(), frame);
      auto y = eval_fml(term.right(), frame);
      return combine(-(t * s_inv), x, s_inv, y);
    }
    case Term::Kind::kRightDiv: {
      // t^{-1} y - (1-t) t^{-1} x
      auto y = eval_fml(term.left(), frame);
      auto x = eval_fml(term.right(), frame);
      return combine(t_inv, y, -(s * t_inv), x);
    }
  }
  return {};
}

AffinePointD eval_fmc(const Term& term, const FreeFrame& frame) {
  switch (term.kind()) {
    case Term::Kind::kGenerator: return leaf<Dyadic>(frame, term.generator_index());
    case Term::Kind::kMul: {
      auto x = eval_fmc(term.left(), frame);
      auto y = eval_fmc(term.right(), frame);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]).halve();
      return x;
    }
    case Term::Kind::kLeftDiv: {
      auto x = eval_fmc(term.left(), frame);
      auto y = eval_fmc(term.right(), frame);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i].twice() - x[i];
      return x;
    }
    case Term::Kind::kRightDiv: {
      auto y = eval_fmc(term.left(), frame);
      auto x = eval_fmc(term.right(), frame);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i].twice() - x[i];
      return x;
    }
  }
  return {};
}

AffinePointD specialize_point(const AffinePointL& p) {
  AffinePointD out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.specialize_half());
  return out;
}

bool words_equal(const Term& lhs, const Term& rhs, Variety variety, const FreeFrame& frame) {
  if (variety == Variety::kMLQnd) return eval_fml(lhs, frame) == eval_fml(rhs, frame);
  return eval_fmc(lhs, frame) == eval_fmc(rhs, frame);
}

std::string to_string(const AffinePointL& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].to_string();
  }
  return out + "]";
}

std::string to_string(const AffinePointD& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].to_string();
  }
  return out + "]";
}

}  // namespace qk
