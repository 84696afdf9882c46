#include "hyperluk/corpus.hpp"

namespace hyperluk {

const std::vector<CorpusEntry>& standard_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"identity", "=> A -> A", true},
      {"weakening", "=> A -> (B -> A)", true},
      {"suffixing", "=> (A -> B) -> ((B -> C) -> (A -> C))", true},
      {"lukasiewicz", "=> ((A -> B) -> B) -> ((B -> A) -> A)", true},
      {"forall-instance", "=> (forall x. P(x)) -> P(c)", true},
      {"exists-intro", "=> P(c) -> exists x. P(x)", true},
      {"forall-exists", "=> (forall x. P(x)) -> exists x. P(x)", true},
      {"partial-identity", "=> 1/2 -> (A -> A)", true},
      {"zero", "=> 0", false},
      {"half-zero", "=> 1/2 -> 0", false},
      {"instance-generalize", "=> P(c) -> forall x. P(x)", false},
  };
  return corpus;
}

}  // namespace hyperluk
