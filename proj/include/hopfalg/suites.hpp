#ifndef HOPFALG_SUITES_HPP
#define HOPFALG_SUITES_HPP

#include <functional>

#include "hopfalg/corpus.hpp"
#include "hopfalg/morita.hpp"

namespace hopfalg {

struct Suite {
  std::string name;
  std::function<Report()> run;
};

// The named verification suites over the shipped corpus, sorted by name. Each suite catches
// its own exceptions and reports them as a failed check.
template <class S> std::vector<Suite> corpus_suites(const Field& f);
// Runs them in order and fills in the timings.
template <class S> std::vector<Report> run_corpus(const Field& f);

// dim of M []_H N from the plain structure maps alone: the x in M (x) N whose coaction
// difference lands in the balancing relations of M (x) H (x) N, modulo those of M (x) N.
template <class S> int cotensor_dim_oracle(const Comodule<S>& m, const Comodule<S>& n);

}  // namespace hopfalg

#endif  // HOPFALG_SUITES_HPP
