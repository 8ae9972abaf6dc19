#pragma once

#include "fgab/exact.hpp"
#include "fgab/padic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fgab {

// Nondecreasing unbounded u : N -> N, given by explicit values followed by
// a constant step: u(j) = values[j] for j < values.size(), then increments
// by `step`.
struct Reindexing {
  std::vector<std::size_t> values;
  std::size_t step = 1;

  std::size_t operator()(std::size_t j) const;
  void validate() const;
};

enum class TailKind { ConstantIdentity, ZeroMaps, EndoIterate, PCompletion, PTorsion };

struct TowerTail {
  TailKind kind = TailKind::ConstantIdentity;
  std::optional<Homomorphism> endo;  // EndoIterate: endomorphism of the last prefix group
  FgGroup base;                      // PCompletion, PTorsion
  Integer p;                         // PCompletion, PTorsion

  static TowerTail constant_identity() { return {}; }
  static TowerTail zero_maps() { return {TailKind::ZeroMaps, {}, {}, 0}; }
  static TowerTail endo_iterate(Homomorphism h) {
    return {TailKind::EndoIterate, std::move(h), {}, 0};
  }
  // A_k = A / p^k A with the projections.
  static TowerTail pcompletion(FgGroup a, Integer p) {
    return {TailKind::PCompletion, {}, std::move(a), std::move(p)};
  }
  // A_k = A[p^k] with multiplication by p.
  static TowerTail ptorsion(FgGroup a, Integer p) {
    return {TailKind::PTorsion, {}, std::move(a), std::move(p)};
  }
};

// A_0 <- A_1 <- ... with maps[k] : A_(k+1) -> A_k. Prefix towers list
// A_0..A_N explicitly and continue with A_N under the tail map; generated
// towers (PCompletion, PTorsion) have an empty prefix.
class Tower {
 public:
  Tower(std::vector<FgGroup> prefix, std::vector<Homomorphism> maps, TowerTail tail);

  bool generated() const;
  const std::vector<FgGroup>& prefix() const { return prefix_; }
  const std::vector<Homomorphism>& prefix_maps() const { return maps_; }
  const TowerTail& tail() const { return tail_; }
  // Index N of the last prefix group.
  std::size_t last_prefix_index() const { return prefix_.size() - 1; }

  FgGroup group(std::size_t k) const;
  Homomorphism map(std::size_t k) const;  // A_(k+1) -> A_k
  // A_k -> A_i for i <= k.
  Homomorphism composite(std::size_t k, std::size_t i) const;

  // B_j = A_u(j); supported for prefix towers.
  Tower reindex(const Reindexing& u) const;

  // The endomorphism of A_N that repeats forever in a prefix tower.
  Homomorphism tail_endomorphism() const;

 private:
  std::vector<FgGroup> prefix_;
  std::vector<Homomorphism> maps_;
  TowerTail tail_;
};

struct MlCertificate {
  bool determined = true;
  // stabilization[i] = least j >= i with f_ji(A_j) = f_ki(A_k) for all k >= j,
  // listed for i < tail_start; beyond that j(i) = i + tail_offset.
  std::vector<std::size_t> stabilization;
  std::size_t tail_start = 0;
  std::size_t tail_offset = 0;
  std::string trace;

  std::size_t index(std::size_t i) const;
};

MlCertificate is_mittag_leffler(const Tower& t, std::size_t bound = 64);

struct LimValue {
  enum class Kind { Group, Completed, Undetermined };
  Kind kind = Kind::Group;
  FgGroup group;
  std::optional<CompletedGroup> completed;
  std::string reason;

  std::string to_string() const;
};

struct Lim1Verdict {
  bool zero = true;
  std::string note;  // certificate when zero, reason otherwise
};

struct LimResult {
  LimValue lim;
  Lim1Verdict lim1;
  MlCertificate ml;
  // For Group limits of prefix towers: lim -> A_N (injective) and the
  // automorphism s of lim with anchor * s^m the projection to A_(N+m).
  std::optional<Homomorphism> anchor;
  std::optional<Homomorphism> shift;
};

LimResult lim(const Tower& t, std::size_t bound = 64);

// Projection lim -> A_k for Group limits with an anchor.
Homomorphism lim_projection(const Tower& t, const LimResult& r, std::size_t k);

enum class SegmentStatus { Verified, Window, Undetermined, Failed };

struct LimSegment {
  std::string node;
  SegmentStatus status = SegmentStatus::Verified;
  std::string detail;
};

struct LimExactReport {
  LimResult a, b, c;
  std::size_t window = 0;
  std::vector<LimSegment> segments;  // six nodes of 0 -> lim -> ... -> lim1 -> 0

  bool all_computable_exact() const;
};

// (j_k, q_k) : A_k -> B_k -> C_k for every level k.
using LevelwiseMaps = std::function<std::pair<Homomorphism, Homomorphism>(std::size_t)>;

// Checks levelwise short exactness and commutation for k < window, then
// assembles the six-term lim/lim1 data. Throws PreconditionError when a
// level fails.
LimExactReport lim_exact_check(const Tower& a, const Tower& b, const Tower& c,
                               const LevelwiseMaps& maps, std::size_t window = 8,
                               std::size_t bound = 64);

// --------------------------------------------------------------- colimits

struct SymbolicGroup {
  enum class Kind { Group, PAdic, Prufer, Localized };
  Kind kind = Kind::Group;
  FgGroup group;
  Integer p;
  std::optional<LocalizedGroup> localized;

  std::string to_string() const;
};

enum class ColimTailKind { EventuallyIdentity, EndoIterate, StandardInjections };

struct ColimTail {
  ColimTailKind kind = ColimTailKind::EventuallyIdentity;
  std::optional<Homomorphism> endo;  // EndoIterate
  Integer p;                         // StandardInjections
  unsigned long step = 1;            // StandardInjections: Z/p^e -> Z/p^(e+step)
};

// A_0 -> A_1 -> ... with maps[k] : A_k -> A_(k+1).
class ColimSequence {
 public:
  ColimSequence(std::vector<FgGroup> prefix, std::vector<Homomorphism> maps, ColimTail tail);

  const ColimTail& tail() const { return tail_; }
  std::size_t last_prefix_index() const { return prefix_.size() - 1; }
  FgGroup group(std::size_t k) const;
  Homomorphism map(std::size_t k) const;  // A_k -> A_(k+1)
  ColimSequence reindex(const Reindexing& u) const;

 private:
  std::vector<FgGroup> prefix_;
  std::vector<Homomorphism> maps_;
  ColimTail tail_;
};

// Eventually-isomorphism tails give the stable group, multiplication by n
// gives A[1/n], standard injections of cyclic p-groups give Z/p^inf.
// Anything else throws PreconditionError.
SymbolicGroup colim_pattern(const ColimSequence& s);

}  // namespace fgab
