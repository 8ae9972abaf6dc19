#pragma once

#include "fgab/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fgab {

// Verdict of exactness at the middle of A -f-> B -g-> C. A failing check
// carries a witness in B: the lexicographically least element of the
// symmetric difference of im(f) and ker(g) when B is small enough to
// enumerate, otherwise the first offending generator image.
struct ExactnessCheck {
  bool exact = true;
  std::optional<GroupElement> witness;
  std::string reason;

  explicit operator bool() const { return exact; }
};

ExactnessCheck is_exact_at(const Homomorphism& f, const Homomorphism& g);
// Exactness of 0 -> A -f-> B and B -g-> C -> 0.
ExactnessCheck check_injective(const Homomorphism& f);
ExactnessCheck check_surjective(const Homomorphism& g);

// A -j-> B -q-> C with j injective, q surjective and im(j) = ker(q).
// Construction throws PreconditionError naming a witness otherwise.
class ShortExactSeq {
 public:
  ShortExactSeq(Homomorphism j, Homomorphism q);

  const Homomorphism& j() const { return j_; }
  const Homomorphism& q() const { return q_; }
  const FgGroup& a() const { return j_.domain(); }
  const FgGroup& b() const { return j_.codomain(); }
  const FgGroup& c() const { return q_.codomain(); }

 private:
  Homomorphism j_;
  Homomorphism q_;
};

// A -> A + C -> C with the canonical injection and projection.
ShortExactSeq split_sequence(const FgGroup& a, const FgGroup& c);

// groups[0] -> ... -> groups[5]; maps[2] is the connecting map. The
// constructor verifies injectivity of maps[0], exactness at the four
// interior nodes and surjectivity of maps[4], and refuses to build
// anything that fails.
class SixTermSequence {
 public:
  SixTermSequence(std::string kind, std::vector<FgGroup> groups,
                  std::vector<Homomorphism> maps);

  const std::string& kind() const { return kind_; }
  const std::vector<FgGroup>& groups() const { return groups_; }
  const std::vector<Homomorphism>& maps() const { return maps_; }
  const Homomorphism& delta() const { return maps_[2]; }
  // One verdict per node, all exact by construction.
  const std::vector<ExactnessCheck>& checks() const { return checks_; }

 private:
  std::string kind_;
  std::vector<FgGroup> groups_;
  std::vector<Homomorphism> maps_;
  std::vector<ExactnessCheck> checks_;
};

// Controls the free choices made while chasing elements. The default is the
// deterministic preimage; a seed adds pseudo-random kernel elements to every
// lift, which must not change any connecting map.
struct LiftPolicy {
  std::optional<std::uint64_t> seed;
};

//   A  -j->  B  -q->  C
//   |f       |g       |h
//   A' -j'-> B' -q'-> C'
struct SnakeInput {
  ShortExactSeq top;
  ShortExactSeq bottom;
  Homomorphism f, g, h;

  // Throws PreconditionError unless both squares commute.
  SnakeInput(ShortExactSeq top, ShortExactSeq bottom, Homomorphism f,
             Homomorphism g, Homomorphism h);
};

// 0 -> ker f -> ker g -> ker h -> cok f -> cok g -> cok h -> 0, with the
// connecting map delta(c) = [j'^-1 g(b)] for any b with q(b) = c.
// `kind` labels the resulting sequence.
SixTermSequence snake(const SnakeInput& s, const LiftPolicy& policy = {},
                      std::string kind = "snake");

// Preimage of y under f, perturbed by a kernel element when the policy
// carries a seed. Throws when y is not in the image.
GroupElement lift_element(const Homomorphism& f, const GroupElement& y,
                          const LiftPolicy& policy, std::uint64_t salt = 0);

// For r with r j = 1, the unique s with q s = 1, r s = 0, j r + s q = 1.
Homomorphism complete_splitting_from_retraction(const ShortExactSeq& e,
                                                const Homomorphism& r);

struct IdempotentSplitting {
  Subgroup image;       // im(e) = ker(1 - e)
  Subgroup complement;  // im(1 - e) = ker(e)
  DirectSum sum;        // im(e) + im(1 - e)
  Homomorphism iso;     // sum -> B, verified bijective
};

IdempotentSplitting split_by_idempotent(const Homomorphism& e);

// Rows are A0 -> A1 -> A2 -> A3 -> A4 and B0 -> ... -> B4 (four maps each),
// verticals p0..p4 with pi : Ai -> Bi.
struct FiveLemmaReport {
  bool p2_injective = false;
  bool p2_surjective = false;
  bool confirmed() const { return p2_injective && p2_surjective; }
};

// Throws PreconditionError describing the first violated hypothesis.
FiveLemmaReport five_lemma_verify(const std::vector<Homomorphism>& top,
                                  const std::vector<Homomorphism>& bottom,
                                  const std::vector<Homomorphism>& verticals);

}  // namespace fgab
