#ifndef HOPFALG_IO_HPP
#define HOPFALG_IO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "hopfalg/corpus.hpp"

namespace hopfalg {

// Text formats, one statement per line, '#' starts a comment, scalars as p/q.
//
//   groupoid NAME | objects o... | arrow ID SRC TGT | comp A B C (C = A then B) | inv A B
//   algebra NAME  | dim N | c I J K V | unit V...
//   hopf NAME     | base REF | total REF | labels L... | flat required|unchecked
//                 | matrix s|t|comult|counit|antipode
//   morphism NAME | source REF | target REF | matrix phi0|phi1
//   comodule NAME | over REF | side left|right | dim N | matrix actI | matrix coaction
//   bundle NAME   | left REF | right REF | carrier REF | matrix alpha|beta|lambda|rho
//
// A matrix is "matrix NAME ROWS COLS" followed by ROWS lines of COLS scalars, or
// "matrix NAME ROWS COLS sparse" followed by "I J V" lines and "end". comult, coaction,
// lambda and rho are given on the plain tensor, index i * dim2 + j for the pair (i, j).
// A REF is a path (relative to the referring file), "corpus:NAME", or empty; an empty REF
// is followed by the referenced block inline, closed by "end".

struct ParseError : std::runtime_error {
  std::string file;
  int line = 0, column = 0;
  ParseError(std::string file, int line, int column, const std::string& msg);
};

// Reads entities from files or text. Objects referenced twice through the same path or
// corpus name are shared.
template <class S> class Loader {
 public:
  explicit Loader(Field f) : f_(f) {}

  const Field& field() const { return f_; }

  FinGroupoid groupoid(const std::string& path);
  AlgPtr<S> algebra(const std::string& path);
  HopfPtr<S> hopf(const std::string& path);
  HopfMorphism<S> morphism(const std::string& path);
  Comodule<S> comodule(const std::string& path);
  BicomoduleAlgebra<S> bundle(const std::string& path);

  // Same, from text. file names the source in errors; refs resolve against base_dir.
  FinGroupoid groupoid_text(const std::string& text, const std::string& file = "<text>", const std::string& base_dir = ".");
  AlgPtr<S> algebra_text(const std::string& text, const std::string& file = "<text>", const std::string& base_dir = ".");
  HopfPtr<S> hopf_text(const std::string& text, const std::string& file = "<text>", const std::string& base_dir = ".");
  HopfMorphism<S> morphism_text(const std::string& text, const std::string& file = "<text>",
                                const std::string& base_dir = ".");
  Comodule<S> comodule_text(const std::string& text, const std::string& file = "<text>", const std::string& base_dir = ".");
  BicomoduleAlgebra<S> bundle_text(const std::string& text, const std::string& file = "<text>",
                                   const std::string& base_dir = ".");

  struct Impl;

 private:
  Field f_;
  std::map<std::string, HopfPtr<S>> hopfs_;
  std::map<std::string, AlgPtr<S>> algebras_;
};

std::string write_groupoid(const FinGroupoid& g);
template <class S> std::string write_algebra(const FinAlgebra<S>& a);
template <class S> std::string write_hopf(const HopfAlgebroid<S>& h);
// An empty ref writes the referenced algebroid inline.
template <class S>
std::string write_morphism(const HopfMorphism<S>& m, const std::string& source_ref = "",
                           const std::string& target_ref = "");
template <class S> std::string write_comodule(const Comodule<S>& m, const std::string& over_ref = "");
template <class S>
std::string write_bundle(const BicomoduleAlgebra<S>& p, const std::string& left_ref = "",
                         const std::string& right_ref = "");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hopfalg

#endif  // HOPFALG_IO_HPP
