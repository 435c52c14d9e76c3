#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/algebra.hpp"
#include "daha/rational_function.hpp"
#include "daha/report.hpp"

namespace daha {

// (w, lambda) stands for u^lambda w.
struct ExtAffineElt {
  Perm w;
  std::vector<int> lambda;

  static ExtAffineElt identity(int n);
  static ExtAffineElt reflection(int n, int i);  // s_i swaps i, i+1 (0-based)
  static ExtAffineElt permutation(const Perm& w);
  static ExtAffineElt translation(const std::vector<int>& lambda);
  static ExtAffineElt pi(int n);

  int n() const { return static_cast<int>(w.size()); }
  ExtAffineElt operator*(const ExtAffineElt& o) const;
  ExtAffineElt inverse() const;
  LaurentPoly act(const LaurentPoly& f) const { return daha::act(w, lambda, f); }
  RationalFunction act(const RationalFunction& f) const { return f.acted(w, lambda); }

  auto operator<=>(const ExtAffineElt&) const = default;
  bool operator==(const ExtAffineElt&) const = default;
};

std::string to_string(const ExtAffineElt& g);

class DiffReflOp {
 public:
  using Terms = std::map<ExtAffineElt, RationalFunction>;

  DiffReflOp() = default;
  explicit DiffReflOp(int n) : n_(n) {}

  static DiffReflOp identity(int n);
  static DiffReflOp element(const ExtAffineElt& g, const RationalFunction& coeff);
  static DiffReflOp multiplication(const RationalFunction& f);
  static DiffReflOp multiplication(const LaurentPoly& f) {
    return multiplication(RationalFunction(f));
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(const ExtAffineElt& g) const;

  void add_term(const ExtAffineElt& g, const RationalFunction& coeff);
  DiffReflOp operator+(const DiffReflOp& o) const;
  DiffReflOp operator-(const DiffReflOp& o) const;
  DiffReflOp operator*(const Rational& q) const;
  DiffReflOp operator*(const LaurentPoly& scalar) const;
  DiffReflOp& operator+=(const DiffReflOp& o);

  DiffReflOp simplified() const;
  DiffReflOp reparam(int sc, int m, int sh = 1) const;
  bool equals(const DiffReflOp& o) const;
  // Numerator of the first coefficient where the two operators differ.
  std::optional<std::string> difference_witness(const DiffReflOp& o) const;

 private:
  int n_ = 1;
  Terms terms_;
};

DiffReflOp compose(const DiffReflOp& a, const DiffReflOp& b);
LaurentPoly apply(const DiffReflOp& op, const LaurentPoly& f);
std::string to_string(const DiffReflOp& op);

// Plain (anti)symmetrizers of W acting by permutations only.
DiffReflOp plain_symmetrizer(int n, int d = 0);
DiffReflOp vandermonde_op(int n);
LaurentPoly vandermonde(int n);

struct Symbol {
  enum class Kind { Sigma, Pi, PiInv, Y, Scalar };
  Kind kind = Kind::Scalar;
  int index = 0;  // 0-based sigma / y index
  LaurentPoly scalar;
};

struct GeneratorWord {
  std::vector<Symbol> symbols;
};

// Linear combination of words.
struct WordSum {
  std::vector<GeneratorWord> words;
};

// Product of word sums, read left to right.
struct WordProduct {
  std::vector<WordSum> factors;
};

GeneratorWord parse_word(const std::string& text, int n);
std::string to_string(const GeneratorWord& w, int n);

GeneratorWord phi(const GeneratorWord& w, int n);
WordSum phi(const WordSum& s, int n);
WordProduct phi(const WordProduct& p, int n);
GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);

struct DahaParams {
  int c_shift = 0;        // c -> c + c_shift h
  bool corrupt_sigma1 = false;  // sigma_1 built with 2c, for negative tests
};

DiffReflOp generator(const Symbol& sym, int n, const DahaParams& p = {});
DiffReflOp evaluate(const GeneratorWord& w, int n, const DahaParams& p = {});
DiffReflOp evaluate(const WordSum& s, int n, const DahaParams& p = {});
DiffReflOp evaluate(const WordProduct& s, int n, const DahaParams& p = {});

// Reduced word of a permutation as sigma indices.
std::vector<int> reduced_word(const Perm& w);
WordSum symmetrizer_word(int n);
GeneratorWord x_lambda_word(const std::vector<int>& lambda);
WordProduct e_lambda_words(const std::vector<int>& lambda);

bool is_dominant(const std::vector<int>& lambda);
bool is_minuscule(const std::vector<int>& lambda);
std::vector<int> fundamental_coweight(int n, int m);

enum class ELambdaMode { Closed, Generators };
DiffReflOp e_lambda(const std::vector<int>& lambda, ELambdaMode mode, int c_shift = 0);

Report verify_relations(int n, const DahaParams& p = {});
// Phi(E_{lambda,c}) Delta = (-1)^{m(n-m)} Delta E_{lambda,c-h} for every fundamental
// coweight omega_m, compared on symmetric inputs after antisymmetric compression.
Report verify_shift_identity(int n);

}  // namespace daha
