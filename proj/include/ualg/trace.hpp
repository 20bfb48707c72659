#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

/// Justification for one recorded merge: the pair came straight from a
/// generator (possibly flipped), or from applying an operation to
/// componentwise-related argument pairs.
struct GeneratorStep {
  int pair_index = 0;
  bool swapped = false;
};

struct OpStep {
  int symbol = 0;
  std::vector<std::pair<Element, Element>> args;  // each already related when recorded
};

using Justification = std::variant<GeneratorStep, OpStep>;

struct MergeEvent {
  Element left = 0;
  Element right = 0;
  Justification why;
};

/// Kinds exposed by justify(): how an arbitrary related pair follows from
/// the recorded merge events.
enum class StepKind { Reflexivity, Generator, Symmetry, Transitivity, OpApplication };

struct JustificationView {
  StepKind kind;
  // Generator / OpApplication: index into events(); Symmetry: index whose
  // reversal justifies the pair; Transitivity: the via element.
  int event_index = -1;
  Element via = -1;
};

/// The justification log of a congruence generation run. The recorded
/// merge events form a spanning forest of the generated partition's
/// blocks: replaying them reproduces the partition, and any related pair
/// is justified by the unique forest path between its endpoints.
class DerivationTrace {
 public:
  DerivationTrace() = default;

  DerivationTrace(int carrier, std::vector<std::pair<Element, Element>> generators,
                  std::vector<MergeEvent> events)
      : carrier_(carrier), generators_(std::move(generators)), events_(std::move(events)) {
    adj_.assign(carrier_, {});
    for (std::size_t k = 0; k < events_.size(); ++k) {
      adj_[events_[k].left].push_back(static_cast<int>(k));
      adj_[events_[k].right].push_back(static_cast<int>(k));
    }
  }

  int carrier() const { return carrier_; }
  const std::vector<std::pair<Element, Element>>& generators() const { return generators_; }
  const std::vector<MergeEvent>& events() const { return events_; }

  /// Forest path from a to b as (event index, forward?) steps; forward
  /// means the event is traversed left-to-right. Empty for a == b.
  /// Throws if a and b are not related.
  std::vector<std::pair<int, bool>> path(Element a, Element b) const {
    if (a == b) return {};
    // DFS over the forest; paths are unique.
    std::vector<int> prev_event(carrier_, -1);
    std::vector<Element> prev_node(carrier_, -1);
    std::vector<Element> stack{a};
    std::vector<bool> seen(carrier_, false);
    seen[a] = true;
    while (!stack.empty()) {
      const Element u = stack.back();
      stack.pop_back();
      if (u == b) break;
      for (int k : adj_[u]) {
        const Element v = events_[k].left == u ? events_[k].right : events_[k].left;
        if (!seen[v]) {
          seen[v] = true;
          prev_event[v] = k;
          prev_node[v] = u;
          stack.push_back(v);
        }
      }
    }
    if (!seen[b]) throw std::invalid_argument("trace: elements are not related");
    std::vector<std::pair<int, bool>> out;
    for (Element cur = b; cur != a; cur = prev_node[cur]) {
      const int k = prev_event[cur];
      out.emplace_back(k, events_[k].right == cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// One-step view of why (a, b) holds: reflexivity, a recorded event, the
  /// flip of a recorded event, or transitivity through the next forest node.
  std::optional<JustificationView> justify(Element a, Element b) const {
    if (a == b) return JustificationView{StepKind::Reflexivity, -1, -1};
    std::vector<std::pair<int, bool>> p;
    try {
      p = path(a, b);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    if (p.size() == 1) {
      const auto& ev = events_[p[0].first];
      if (!p[0].second) return JustificationView{StepKind::Symmetry, p[0].first, -1};
      if (std::holds_alternative<GeneratorStep>(ev.why))
        return JustificationView{StepKind::Generator, p[0].first, -1};
      return JustificationView{StepKind::OpApplication, p[0].first, -1};
    }
    const auto& first = events_[p[0].first];
    const Element via = p[0].second ? first.right : first.left;
    return JustificationView{StepKind::Transitivity, -1, via};
  }

  /// Rebuilds the partition by uniting event endpoints in order.
  Partition replay() const {
    UnionFind uf(carrier_);
    for (const auto& ev : events_) uf.unite(ev.left, ev.right);
    return Partition::from_union_find(uf);
  }

  /// Replays while checking that every event is justified by the state so
  /// far: generator steps match the generator list, op steps apply an
  /// operation of `alg` to already-related argument pairs with the claimed
  /// endpoints as results. Returns the partition; throws on a bad event.
  Partition verify_and_replay(const FiniteAlgebra& alg) const {
    UnionFind uf(carrier_);
    for (std::size_t k = 0; k < events_.size(); ++k) {
      const auto& ev = events_[k];
      if (const auto* g = std::get_if<GeneratorStep>(&ev.why)) {
        if (g->pair_index < 0 || g->pair_index >= static_cast<int>(generators_.size()))
          throw std::runtime_error("trace: generator index out of range");
        auto [x, y] = generators_[g->pair_index];
        if (g->swapped) std::swap(x, y);
        if (x != ev.left || y != ev.right) throw std::runtime_error("trace: generator endpoints mismatch");
      } else {
        const auto& op = std::get<OpStep>(ev.why);
        const auto& sig = alg.signature();
        if (op.symbol < 0 || op.symbol >= static_cast<int>(sig.size()))
          throw std::runtime_error("trace: bad symbol");
        if (static_cast<int>(op.args.size()) != sig[op.symbol].arity)
          throw std::runtime_error("trace: op arity mismatch");
        std::vector<Element> l, r;
        for (auto [x, y] : op.args) {
          if (!uf.same(x, y)) throw std::runtime_error("trace: op argument pair not yet related");
          l.push_back(x);
          r.push_back(y);
        }
        if (alg.apply(op.symbol, l) != ev.left || alg.apply(op.symbol, r) != ev.right)
          throw std::runtime_error("trace: op result mismatch");
      }
      uf.unite(ev.left, ev.right);
    }
    return Partition::from_union_find(uf);
  }

 private:
  int carrier_ = 0;
  std::vector<std::pair<Element, Element>> generators_;
  std::vector<MergeEvent> events_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace ualg
