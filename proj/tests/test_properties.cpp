#include <doctest.h>

#include "properties.hpp"
#include "support.hpp"

using namespace weakring;

namespace {

const std::vector<Instance>& corpus() {
  static const auto c = default_corpus();
  return c;
}

}  // namespace

TEST_CASE("structural invariants over the corpus rings") {
  for (const auto& ring : properties::corpus_rings(corpus())) {
    CAPTURE(ring->describe());
    CHECK(verify_ring_axioms(*ring).ok);
    CHECK(properties::product_sets_componentwise(ring) == "");
    CHECK(properties::central_plus_nilpotent(ring) == "");
    CHECK(properties::maximal_implies_prime(ring) == "");
    if (is_commutative(*ring)) CHECK(properties::radical_is_meet_of_maximals(ring) == "");
    if (ring->order() <= 16) CHECK(properties::closure_laws(ring) == "");
  }
}

TEST_CASE("flags are mutually consistent and witnesses are sound") {
  for (const auto* p : properties::corpus_pairs(corpus())) {
    CAPTURE(p->ring->describe());
    CAPTURE(p->ideal.describe());
    CHECK(flags_consistent(classify(p->ideal).flags));
    CHECK(properties::witnesses_sound(p->ideal) == "");
  }
}

TEST_CASE("cleanness is monotone in the ideal") {
  for (const auto& ring : properties::corpus_rings(corpus())) {
    const auto ideals = all_ideals(ring);
    for (const auto& small : ideals) {
      for (const auto& big : ideals) {
        if (!is_subset(small, big)) continue;
        CAPTURE(ring->describe());
        if (is_I_clean(small)) CHECK(is_I_clean(big));
        if (is_weakly_I_clean(small)) CHECK(is_weakly_I_clean(big));
      }
    }
  }
}

TEST_CASE("quotient by an ideal preserves the axioms") {
  for (const auto* p : properties::corpus_pairs(corpus())) {
    const auto q = quotient(p->ring, p->ideal);
    CHECK(q.ring->order() * p->ideal.size() == p->ring->order());
    CHECK(verify_ring_axioms(*q.ring).ok);
  }
}
