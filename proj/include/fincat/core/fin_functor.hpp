#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fincat/core/fin_category.hpp"

namespace fincat {

// A functor between explicit finite categories, stored as total maps on
// object and morphism indices.
struct FinFunctor {
  CatPtr src, tgt;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId on_obj(ObjId a) const { return obj_map[a]; }
  MorId on_mor(MorId f) const { return mor_map[f]; }

  bool operator==(const FinFunctor& o) const {
    return src == o.src && tgt == o.tgt && obj_map == o.obj_map && mor_map == o.mor_map;
  }
};

inline bool functor_well_formed(const FinFunctor& F, std::string* why = nullptr) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(F.obj_map.size()) != A.num_objects() ||
      static_cast<int>(F.mor_map.size()) != A.num_morphisms())
    return bad("map sizes do not match the source category");
  for (ObjId a = 0; a < A.num_objects(); ++a)
    if (F.obj_map[a] < 0 || F.obj_map[a] >= B.num_objects()) return bad("object map out of range");
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    MorId g = F.mor_map[f];
    if (g < 0 || g >= B.num_morphisms()) return bad("morphism map out of range");
    if (B.src(g) != F.obj_map[A.src(f)] || B.tgt(g) != F.obj_map[A.tgt(f)])
      return bad("morphism '" + A.morphisms[f].name + "' is not sent over its endpoints");
  }
  for (ObjId a = 0; a < A.num_objects(); ++a)
    if (F.mor_map[A.identity(a)] != B.identity(F.obj_map[a]))
      return bad("identity of '" + A.object_names[a] + "' not preserved");
  for (MorId g = 0; g < A.num_morphisms(); ++g)
    for (MorId f = 0; f < A.num_morphisms(); ++f)
      if (A.composable(g, f) &&
          F.mor_map[A.compose(g, f)] != B.compose(F.mor_map[g], F.mor_map[f]))
        return bad("composition not preserved on (" + A.morphisms[g].name + ", " +
                   A.morphisms[f].name + ")");
  return true;
}

inline FinFunctor identity_functor(CatPtr a) {
  FinFunctor F{a, a, {}, {}};
  F.obj_map.resize(a->num_objects());
  F.mor_map.resize(a->num_morphisms());
  for (ObjId x = 0; x < a->num_objects(); ++x) F.obj_map[x] = x;
  for (MorId f = 0; f < a->num_morphisms(); ++f) F.mor_map[f] = f;
  return F;
}

// G after F
inline FinFunctor compose(const FinFunctor& G, const FinFunctor& F) {
  FinFunctor H{F.src, G.tgt, {}, {}};
  H.obj_map.resize(F.obj_map.size());
  H.mor_map.resize(F.mor_map.size());
  for (std::size_t a = 0; a < F.obj_map.size(); ++a) H.obj_map[a] = G.obj_map[F.obj_map[a]];
  for (std::size_t f = 0; f < F.mor_map.size(); ++f) H.mor_map[f] = G.mor_map[F.mor_map[f]];
  return H;
}

inline bool is_identity_functor(const FinFunctor& F) {
  if (F.src->num_objects() != F.tgt->num_objects() ||
      F.src->num_morphisms() != F.tgt->num_morphisms())
    return false;
  for (std::size_t a = 0; a < F.obj_map.size(); ++a)
    if (F.obj_map[a] != static_cast<ObjId>(a)) return false;
  for (std::size_t f = 0; f < F.mor_map.size(); ++f)
    if (F.mor_map[f] != static_cast<MorId>(f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Natural transformations

struct NatTransf {
  FinFunctor source, target;       // parallel functors
  std::vector<MorId> components;   // one morphism of target category per source object

  MorId at(ObjId a) const { return components[a]; }

  bool operator==(const NatTransf& o) const {
    return source == o.source && target == o.target && components == o.components;
  }
};

inline bool natural(const NatTransf& t, std::string* why = nullptr) {
  const auto& A = *t.source.src;
  const auto& B = *t.source.tgt;
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(t.source.src == t.target.src && t.source.tgt == t.target.tgt))
    return bad("components between non-parallel functors");
  if (static_cast<int>(t.components.size()) != A.num_objects())
    return bad("one component required per source object");
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId c = t.components[a];
    if (c < 0 || c >= B.num_morphisms()) return bad("component out of range");
    if (B.src(c) != t.source.obj_map[a] || B.tgt(c) != t.target.obj_map[a])
      return bad("component at '" + A.object_names[a] + "' has wrong endpoints");
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    ObjId a = A.src(f), b = A.tgt(f);
    if (B.compose(t.components[b], t.source.mor_map[f]) !=
        B.compose(t.target.mor_map[f], t.components[a]))
      return bad("naturality fails at '" + A.morphisms[f].name + "'");
  }
  return true;
}

inline NatTransf identity_transf(const FinFunctor& F) {
  NatTransf t{F, F, {}};
  t.components.resize(F.obj_map.size());
  for (std::size_t a = 0; a < F.obj_map.size(); ++a)
    t.components[a] = F.tgt->identity(F.obj_map[a]);
  return t;
}

// vertical composite: u after t
inline NatTransf vcompose(const NatTransf& u, const NatTransf& t) {
  NatTransf r{t.source, u.target, {}};
  r.components.resize(t.components.size());
  const auto& B = *t.source.tgt;
  for (std::size_t a = 0; a < t.components.size(); ++a)
    r.components[a] = B.compose(u.components[a], t.components[a]);
  return r;
}

// left whisker: H ∘ t for H out of the target category of t
inline NatTransf whisker_left(const FinFunctor& H, const NatTransf& t) {
  NatTransf r{compose(H, t.source), compose(H, t.target), {}};
  r.components.resize(t.components.size());
  for (std::size_t a = 0; a < t.components.size(); ++a)
    r.components[a] = H.mor_map[t.components[a]];
  return r;
}

// right whisker: t ∘ K for K into the source category of t
inline NatTransf whisker_right(const NatTransf& t, const FinFunctor& K) {
  NatTransf r{compose(t.source, K), compose(t.target, K), {}};
  r.components.resize(K.obj_map.size());
  for (std::size_t a = 0; a < K.obj_map.size(); ++a)
    r.components[a] = t.components[K.obj_map[a]];
  return r;
}

inline bool transf_invertible(const NatTransf& t) {
  const auto& B = *t.source.tgt;
  for (MorId c : t.components)
    if (!B.is_iso(c)) return false;
  return true;
}

inline NatTransf transf_inverse(const NatTransf& t) {
  NatTransf r{t.target, t.source, {}};
  const auto& B = *t.source.tgt;
  r.components.resize(t.components.size());
  for (std::size_t a = 0; a < t.components.size(); ++a) {
    auto inv = B.inverse(t.components[a]);
    if (!inv) throw std::runtime_error("transf_inverse: component is not invertible");
    r.components[a] = *inv;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.  Results come back in lexicographic order of the
// underlying index vectors, so callers can rely on a stable canonical order.

class NotParallel : public std::runtime_error {
public:
  NotParallel() : std::runtime_error("natural transformations require parallel functors") {}
};

inline std::vector<FinFunctor> enumerate_functors(CatPtr a, CatPtr b,
                                                  const SearchBudget& budget = default_budget()) {
  const auto& A = *a;
  const auto& B = *b;
  std::vector<FinFunctor> out;
  if (A.num_objects() == 0) {
    out.push_back(FinFunctor{a, b, {}, {}});
    return out;
  }
  if (B.num_objects() == 0) return out;  // no functor from nonempty into empty

  const int n = A.num_objects();
  const int m = A.num_morphisms();

  std::vector<ObjId> obj_map(n, 0);
  // non-identity morphisms get chosen; identities are forced
  std::vector<MorId> free_mors;
  for (MorId f = 0; f < m; ++f)
    if (!A.is_identity(f)) free_mors.push_back(f);

  std::vector<MorId> mor_map(m, -1);

  auto assign_mor = [&](auto&& self, std::size_t k) -> void {
    budget.charge();
    if (k == free_mors.size()) {
      // composition check
      for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f)
          if (A.composable(g, f) && mor_map[A.compose(g, f)] != B.compose(mor_map[g], mor_map[f]))
            return;
      out.push_back(FinFunctor{a, b, obj_map, mor_map});
      return;
    }
    MorId f = free_mors[k];
    for (MorId c = 0; c < B.num_morphisms(); ++c) {
      if (B.src(c) != obj_map[A.src(f)] || B.tgt(c) != obj_map[A.tgt(f)]) continue;
      mor_map[f] = c;
      // partial composition pruning over already-assigned morphisms
      bool ok = true;
      for (std::size_t j = 0; ok && j <= k; ++j) {
        MorId g = free_mors[j];
        if (A.composable(g, f)) {
          MorId gf = A.compose(g, f);
          if (mor_map[gf] >= 0 && mor_map[gf] != B.compose(mor_map[g], mor_map[f])) ok = false;
        }
        if (ok && A.composable(f, g)) {
          MorId fg = A.compose(f, g);
          if (mor_map[fg] >= 0 && mor_map[fg] != B.compose(mor_map[f], mor_map[g])) ok = false;
        }
      }
      if (ok) self(self, k + 1);
      mor_map[f] = -1;
    }
  };

  auto assign_obj = [&](auto&& self, int k) -> void {
    budget.charge();
    if (k == n) {
      for (ObjId x = 0; x < n; ++x) mor_map[A.identity(x)] = B.identity(obj_map[x]);
      assign_mor(assign_mor, 0);
      return;
    }
    for (ObjId y = 0; y < B.num_objects(); ++y) {
      obj_map[k] = y;
      self(self, k + 1);
    }
  };
  assign_obj(assign_obj, 0);
  return out;
}

inline std::vector<NatTransf> enumerate_nat_transfs(const FinFunctor& F, const FinFunctor& G,
                                                    const SearchBudget& budget = default_budget()) {
  if (!(F.src == G.src && F.tgt == G.tgt)) throw NotParallel{};
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  std::vector<NatTransf> out;
  const int n = A.num_objects();
  std::vector<MorId> comp(n, -1);

  auto rec = [&](auto&& self, ObjId a) -> void {
    budget.charge();
    if (a == n) {
      out.push_back(NatTransf{F, G, comp});
      return;
    }
    for (MorId c : B.hom(F.obj_map[a], G.obj_map[a])) {
      comp[a] = c;
      // naturality against all morphisms whose endpoints are already assigned
      bool ok = true;
      for (MorId f = 0; ok && f < A.num_morphisms(); ++f) {
        ObjId x = A.src(f), y = A.tgt(f);
        if (x <= a && y <= a)
          ok = B.compose(comp[y], F.mor_map[f]) == B.compose(G.mor_map[f], comp[x]);
      }
      if (ok) self(self, a + 1);
      comp[a] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace fincat
