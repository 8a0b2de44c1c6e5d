#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fincat/core/arrow_cats.hpp"
#include "fincat/core/fin_category.hpp"
#include "fincat/core/fin_functor.hpp"

namespace fincat {

// Direct, search-based decision procedures for the morphism classes of
// interest.  Each is decided by exhaustive search over the finite data.

inline bool is_faithful(const FinFunctor& F) {
  const auto& A = *F.src;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (ObjId b = 0; b < A.num_objects(); ++b) {
      auto hom = A.hom(a, b);
      for (std::size_t i = 0; i < hom.size(); ++i)
        for (std::size_t j = i + 1; j < hom.size(); ++j)
          if (F.mor_map[hom[i]] == F.mor_map[hom[j]]) return false;
    }
  return true;
}

inline bool is_full(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (ObjId b = 0; b < A.num_objects(); ++b) {
      auto hom = A.hom(a, b);
      for (MorId g : B.hom(F.obj_map[a], F.obj_map[b])) {
        bool hit = false;
        for (MorId f : hom)
          if (F.mor_map[f] == g) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
    }
  return true;
}

inline bool is_fully_faithful(const FinFunctor& F) { return is_faithful(F) && is_full(F); }

inline bool is_conservative(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    if (B.is_iso(F.mor_map[f]) && !A.is_iso(f)) return false;
  return true;
}

inline bool is_essentially_surjective(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (ObjId b = 0; b < B.num_objects(); ++b) {
    bool hit = false;
    for (ObjId a = 0; a < A.num_objects() && !hit; ++a)
      for (MorId m : B.hom(F.obj_map[a], b))
        if (B.is_iso(m)) {
          hit = true;
          break;
        }
    if (!hit) return false;
  }
  return true;
}

inline bool is_equivalence(const FinFunctor& F) {
  return is_fully_faithful(F) && is_essentially_surjective(F);
}

inline bool is_isomorphism(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  if (A.num_objects() != B.num_objects() || A.num_morphisms() != B.num_morphisms()) return false;
  std::vector<bool> obj_hit(B.num_objects(), false), mor_hit(B.num_morphisms(), false);
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    if (obj_hit[F.obj_map[a]]) return false;
    obj_hit[F.obj_map[a]] = true;
  }
  for (MorId f = 0; f < A.num_morphisms(); ++f) {
    if (mor_hit[F.mor_map[f]]) return false;
    mor_hit[F.mor_map[f]] = true;
  }
  return true;
}

// isofibration: every iso β : b ≅ Fa lifts to an iso into a
inline bool is_isofibration(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId beta : B.isos_into(F.obj_map[a])) {
      bool hit = false;
      for (MorId gamma : A.isos_into(a))
        if (F.mor_map[gamma] == beta) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

// discrete isofibration: iso lifts with prescribed source exist uniquely
inline bool is_discrete_isofibration(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId beta : B.isos_from(F.obj_map[a])) {
      int count = 0;
      for (MorId gamma : A.isos_from(a))
        if (F.mor_map[gamma] == beta) ++count;
      if (count != 1) return false;
    }
  return true;
}

// The same condition via invertibility of the induced comparison
// R : A^I -> Pf between the iso path category and the pseudolimit of F.
inline bool is_discrete_isofibration_via_rf(const FinFunctor& F) {
  ArrowCat ai = iso_path_category(F.src);
  PseudolimitData pf = pseudolimit_data(F);
  const auto& A = *F.src;
  FinFunctor R{ai.cat, pf.cat, {}, {}};
  for (MorId gamma : ai.object_arrow) {
    ObjId o = pf.object_of(A.src(gamma), F.mor_map[gamma], F.obj_map[A.tgt(gamma)]);
    if (o < 0) return false;  // cannot happen: image triple always exists
    R.obj_map.push_back(o);
  }
  for (std::size_t m = 0; m < ai.mor_square.size(); ++m) {
    auto [w0, w1] = ai.mor_square[m];
    MorId im = pf.morphism_of(R.obj_map[ai.cat->src(static_cast<MorId>(m))],
                              R.obj_map[ai.cat->tgt(static_cast<MorId>(m))], w0, F.mor_map[w1]);
    if (im < 0) return false;
    R.mor_map.push_back(im);
  }
  return is_isomorphism(R);
}

// ---------------------------------------------------------------------------
// Equivalence inverses as adjoint equivalences.

struct AdjointEquivalence {
  FinFunctor inverse;  // G : B -> A
  NatTransf unit;      // 1_A ⇒ G∘F
  NatTransf counit;    // F∘G ⇒ 1_B
};

// Adjoint-equivalence witness for an equivalence F.  The inverse prefers an
// identity counit component where one exists and is otherwise the least
// candidate in index order, so the identity functor gets the identity
// witness back.
inline std::optional<AdjointEquivalence> find_equivalence_inverse(const FinFunctor& F) {
  if (!is_equivalence(F)) return std::nullopt;
  const auto& A = *F.src;
  const auto& B = *F.tgt;

  std::vector<ObjId> g_obj(B.num_objects(), -1);
  std::vector<MorId> eps(B.num_objects(), -1);  // counit components F(Gb) -> b
  for (ObjId b = 0; b < B.num_objects(); ++b) {
    for (ObjId a = 0; a < A.num_objects() && g_obj[b] < 0; ++a)
      if (F.obj_map[a] == b) {
        g_obj[b] = a;
        eps[b] = B.identity(b);
      }
    for (ObjId a = 0; a < A.num_objects() && g_obj[b] < 0; ++a)
      for (MorId m : B.hom(F.obj_map[a], b))
        if (B.is_iso(m)) {
          g_obj[b] = a;
          eps[b] = m;
          break;
        }
  }

  // G on morphisms: unique u with F(u) = eps_b'^{-1} ∘ v ∘ eps_b
  FinFunctor G{F.tgt, F.src, g_obj, {}};
  G.mor_map.resize(B.num_morphisms(), -1);
  for (MorId v = 0; v < B.num_morphisms(); ++v) {
    ObjId b = B.src(v), b2 = B.tgt(v);
    MorId want = B.compose(*B.inverse(eps[b2]), B.compose(v, eps[b]));
    for (MorId u : A.hom(g_obj[b], g_obj[b2]))
      if (F.mor_map[u] == want) {
        G.mor_map[v] = u;
        break;
      }
    if (G.mor_map[v] < 0) return std::nullopt;  // not reachable for equivalences
  }

  AdjointEquivalence out;
  out.inverse = G;
  out.counit = NatTransf{compose(F, G), identity_functor(F.tgt), eps};
  // unit: unique eta_a with F(eta_a) = eps_{Fa}^{-1}
  std::vector<MorId> eta(A.num_objects(), -1);
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId want = *B.inverse(eps[F.obj_map[a]]);
    for (MorId u : A.hom(a, g_obj[F.obj_map[a]]))
      if (F.mor_map[u] == want) {
        eta[a] = u;
        break;
      }
    if (eta[a] < 0) return std::nullopt;
  }
  out.unit = NatTransf{identity_functor(F.src), compose(G, F), eta};
  return out;
}

inline bool triangle_identities_hold(const FinFunctor& F, const AdjointEquivalence& w) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  const FinFunctor& G = w.inverse;
  // (counit ∘ F) · (F ∘ unit) = id_F and (G ∘ counit) · (unit ∘ G) = id_G
  for (ObjId a = 0; a < A.num_objects(); ++a)
    if (B.compose(w.counit.components[F.obj_map[a]], F.mor_map[w.unit.components[a]]) !=
        B.identity(F.obj_map[a]))
      return false;
  for (ObjId b = 0; b < B.num_objects(); ++b)
    if (A.compose(G.mor_map[w.counit.components[b]], w.unit.components[G.obj_map[b]]) !=
        A.identity(G.obj_map[b]))
      return false;
  return true;
}

// surjective (retract) equivalence: a strict section that is an equivalence
// inverse.  Returns the least section in enumeration order.
inline std::optional<FinFunctor> find_strict_section(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  const int n = B.num_objects();
  std::vector<ObjId> obj(n, -1);
  std::vector<MorId> mor(B.num_morphisms(), -1);

  auto assign_mor = [&](auto&& self, MorId v) -> bool {
    if (v == B.num_morphisms()) {
      for (MorId g = 0; g < B.num_morphisms(); ++g)
        for (MorId f = 0; f < B.num_morphisms(); ++f)
          if (B.composable(g, f) && mor[B.compose(g, f)] != A.compose(mor[g], mor[f]))
            return false;
      return true;
    }
    if (B.is_identity(v)) {
      mor[v] = A.identity(obj[B.src(v)]);
      if (F.mor_map[mor[v]] != v) return false;
      return self(self, v + 1);
    }
    for (MorId u : A.hom(obj[B.src(v)], obj[B.tgt(v)])) {
      if (F.mor_map[u] != v) continue;
      mor[v] = u;
      if (self(self, v + 1)) return true;
    }
    mor[v] = -1;
    return false;
  };
  auto assign_obj = [&](auto&& self, ObjId b) -> bool {
    if (b == n) return assign_mor(assign_mor, 0);
    for (ObjId a = 0; a < A.num_objects(); ++a) {
      if (F.obj_map[a] != b) continue;
      obj[b] = a;
      if (self(self, b + 1)) return true;
    }
    obj[b] = -1;
    return false;
  };
  if (!assign_obj(assign_obj, 0)) return std::nullopt;
  return FinFunctor{F.tgt, F.src, obj, mor};
}

inline bool is_surjective_equivalence(const FinFunctor& F) {
  if (!is_equivalence(F)) return false;
  return find_strict_section(F).has_value();
}

// ---------------------------------------------------------------------------
// Adjoint searches.  A right adjoint with identity counit to F : X -> Y
// assigns to each y an object r_y over y through which every F(x) -> y
// factors uniquely on the nose; dually for left adjoints with identity
// unit.  These run the universal-property scan directly.

inline std::optional<FinFunctor> right_adjoint_identity_counit(const FinFunctor& F) {
  const auto& X = *F.src;
  const auto& Y = *F.tgt;
  std::vector<ObjId> r(Y.num_objects(), -1);
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    for (ObjId cand = 0; cand < X.num_objects(); ++cand) {
      if (F.obj_map[cand] != y) continue;
      bool universal = true;
      for (ObjId x = 0; x < X.num_objects() && universal; ++x)
        for (MorId g : Y.hom(F.obj_map[x], y)) {
          int lifts = 0;
          for (MorId u : X.hom(x, cand))
            if (F.mor_map[u] == g) ++lifts;
          if (lifts != 1) {
            universal = false;
            break;
          }
        }
      if (universal) {
        r[y] = cand;
        break;
      }
    }
    if (r[y] < 0) return std::nullopt;
  }
  FinFunctor R{F.tgt, F.src, r, {}};
  R.mor_map.resize(Y.num_morphisms(), -1);
  for (MorId v = 0; v < Y.num_morphisms(); ++v) {
    for (MorId u : X.hom(r[Y.src(v)], r[Y.tgt(v)]))
      if (F.mor_map[u] == v) {
        R.mor_map[v] = u;
        break;
      }
    if (R.mor_map[v] < 0) return std::nullopt;
  }
  return R;
}

inline std::optional<FinFunctor> left_adjoint_identity_unit(const FinFunctor& F) {
  const auto& X = *F.src;
  const auto& Y = *F.tgt;
  std::vector<ObjId> l(Y.num_objects(), -1);
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    for (ObjId cand = 0; cand < X.num_objects(); ++cand) {
      if (F.obj_map[cand] != y) continue;
      bool universal = true;
      for (ObjId x = 0; x < X.num_objects() && universal; ++x)
        for (MorId g : Y.hom(y, F.obj_map[x])) {
          int lifts = 0;
          for (MorId u : X.hom(cand, x))
            if (F.mor_map[u] == g) ++lifts;
          if (lifts != 1) {
            universal = false;
            break;
          }
        }
      if (universal) {
        l[y] = cand;
        break;
      }
    }
    if (l[y] < 0) return std::nullopt;
  }
  FinFunctor L{F.tgt, F.src, l, {}};
  L.mor_map.resize(Y.num_morphisms(), -1);
  for (MorId v = 0; v < Y.num_morphisms(); ++v) {
    for (MorId u : X.hom(l[Y.src(v)], l[Y.tgt(v)]))
      if (F.mor_map[u] == v) {
        L.mor_map[v] = u;
        break;
      }
    if (L.mor_map[v] < 0) return std::nullopt;
  }
  return L;
}

struct LeftAdjointWitness {
  FinFunctor adjoint;        // L : Y -> X
  std::vector<MorId> unit;   // components y -> F(Ly), one per object of Y
};

inline std::optional<LeftAdjointWitness> left_adjoint_invertible_unit(const FinFunctor& F) {
  const auto& X = *F.src;
  const auto& Y = *F.tgt;
  std::vector<ObjId> l(Y.num_objects(), -1);
  std::vector<MorId> eta(Y.num_objects(), -1);
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    for (ObjId cand = 0; cand < X.num_objects() && l[y] < 0; ++cand) {
      for (MorId e : Y.hom(y, F.obj_map[cand])) {
        if (!Y.is_iso(e)) continue;
        bool universal = true;
        for (ObjId x = 0; x < X.num_objects() && universal; ++x)
          for (MorId g : Y.hom(y, F.obj_map[x])) {
            int lifts = 0;
            for (MorId u : X.hom(cand, x))
              if (Y.compose(F.mor_map[u], e) == g) ++lifts;
            if (lifts != 1) {
              universal = false;
              break;
            }
          }
        if (universal) {
          l[y] = cand;
          eta[y] = e;
          break;
        }
      }
    }
    if (l[y] < 0) return std::nullopt;
  }
  FinFunctor L{F.tgt, F.src, l, {}};
  L.mor_map.resize(Y.num_morphisms(), -1);
  for (MorId v = 0; v < Y.num_morphisms(); ++v) {
    // L(v) is the unique u with F(u)∘eta_src = eta_tgt∘v
    MorId want = Y.compose(eta[Y.tgt(v)], v);
    for (MorId u : X.hom(l[Y.src(v)], l[Y.tgt(v)]))
      if (Y.compose(F.mor_map[u], eta[Y.src(v)]) == want) {
        L.mor_map[v] = u;
        break;
      }
    if (L.mor_map[v] < 0) return std::nullopt;
  }
  return LeftAdjointWitness{L, eta};
}

struct RightAdjointWitness {
  FinFunctor adjoint;          // R : Y -> X
  std::vector<MorId> counit;   // components F(Ry) -> y
};

// A plain right adjoint, computed as a terminal object of each comma
// category F/y, taking the least witness in index order.
inline std::optional<RightAdjointWitness> right_adjoint(const FinFunctor& F) {
  const auto& X = *F.src;
  const auto& Y = *F.tgt;
  std::vector<ObjId> r(Y.num_objects(), -1);
  std::vector<MorId> eps(Y.num_objects(), -1);
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    for (ObjId cand = 0; cand < X.num_objects() && r[y] < 0; ++cand) {
      for (MorId e : Y.hom(F.obj_map[cand], y)) {
        bool universal = true;
        for (ObjId x = 0; x < X.num_objects() && universal; ++x)
          for (MorId g : Y.hom(F.obj_map[x], y)) {
            int lifts = 0;
            for (MorId u : X.hom(x, cand))
              if (Y.compose(e, F.mor_map[u]) == g) ++lifts;
            if (lifts != 1) {
              universal = false;
              break;
            }
          }
        if (universal) {
          r[y] = cand;
          eps[y] = e;
          break;
        }
      }
    }
    if (r[y] < 0) return std::nullopt;
  }
  FinFunctor R{F.tgt, F.src, r, {}};
  R.mor_map.resize(Y.num_morphisms(), -1);
  for (MorId v = 0; v < Y.num_morphisms(); ++v) {
    MorId want = Y.compose(v, eps[Y.src(v)]);
    for (MorId u : X.hom(r[Y.src(v)], r[Y.tgt(v)]))
      if (Y.compose(eps[Y.tgt(v)], F.mor_map[u]) == want) {
        R.mor_map[v] = u;
        break;
      }
    if (R.mor_map[v] < 0) return std::nullopt;
  }
  return RightAdjointWitness{R, eps};
}

// ---------------------------------------------------------------------------
// Fibrations.

// u is cartesian for F when every compatible factorisation problem through
// it has a unique solution.
inline bool is_cartesian(const FinFunctor& F, MorId u) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  ObjId atil = A.src(u), a = A.tgt(u);
  for (ObjId a2 = 0; a2 < A.num_objects(); ++a2)
    for (MorId u2 : A.hom(a2, a))
      for (MorId w : B.hom(F.obj_map[a2], F.obj_map[atil])) {
        if (B.compose(F.mor_map[u], w) != F.mor_map[u2]) continue;
        int count = 0;
        for (MorId what : A.hom(a2, atil))
          if (F.mor_map[what] == w && A.compose(u, what) == u2) ++count;
        if (count != 1) return false;
      }
  return true;
}

struct CartesianLift {
  ObjId at;     // object of the source category
  MorId below;  // morphism of the target into F(at)
  MorId lift;   // cartesian lift with target at
};

// Grothendieck fibration by direct cartesian-lift search.
inline std::optional<std::vector<CartesianLift>> fibration_lifts(const FinFunctor& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  std::vector<CartesianLift> lifts;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId v = 0; v < B.num_morphisms(); ++v) {
      if (B.tgt(v) != F.obj_map[a]) continue;
      MorId found = -1;
      for (MorId u = 0; u < A.num_morphisms(); ++u) {
        if (A.tgt(u) != a || F.mor_map[u] != v) continue;
        if (is_cartesian(F, u)) {
          found = u;
          break;
        }
      }
      if (found < 0) return std::nullopt;
      lifts.push_back({a, v, found});
    }
  return lifts;
}

inline bool is_fibration_direct(const FinFunctor& F) { return fibration_lifts(F).has_value(); }

// Fibration via the comma characterisation: the canonical
// t : A^2 -> B/F has a right adjoint with identity counit.
inline bool is_fibration_via_comma(const FinFunctor& F) {
  ArrowCat a2 = arrow_category(F.src);
  CommaData bf = comma_data(identity_functor(F.tgt), F);
  const auto& A = *F.src;
  FinFunctor t{a2.cat, bf.cat, {}, {}};
  for (MorId u : a2.object_arrow) {
    ObjId o = bf.object_of(F.obj_map[A.src(u)], F.mor_map[u], A.tgt(u));
    if (o < 0) return false;
    t.obj_map.push_back(o);
  }
  for (std::size_t m = 0; m < a2.mor_square.size(); ++m) {
    auto [w0, w1] = a2.mor_square[m];
    ObjId s = t.obj_map[a2.cat->src(static_cast<MorId>(m))];
    ObjId tt = t.obj_map[a2.cat->tgt(static_cast<MorId>(m))];
    MorId im = -1;
    for (MorId k = 0; k < bf.cat->num_morphisms(); ++k)
      if (bf.cat->src(k) == s && bf.cat->tgt(k) == tt && bf.mor_pair[k].first == F.mor_map[w0] &&
          bf.mor_pair[k].second == w1) {
        im = k;
        break;
      }
    if (im < 0) return false;
    t.mor_map.push_back(im);
  }
  return right_adjoint_identity_counit(t).has_value();
}

// ---------------------------------------------------------------------------
// Normal isofibrations: F supports a normal cleavage exactly when the
// canonical section A -> PF admits a retraction over B.

inline std::optional<FinFunctor> normal_cleavage(const FinFunctor& F,
                                                 const SearchBudget& budget = default_budget()) {
  PseudolimitData pf = pseudolimit_data(F, budget);
  const auto& A = *F.src;
  const auto& P = *pf.cat;

  // x : PF -> A with x∘s = 1_A and F∘x = q.
  std::vector<ObjId> xobj(P.num_objects(), -1);
  std::vector<MorId> xmor(P.num_morphisms(), -1);
  for (ObjId k = 0; k < P.num_objects(); ++k) {
    const auto& tr = pf.objects[k];
    if (tr.beta == F.tgt->identity(F.obj_map[tr.a])) xobj[k] = tr.a;  // forced on the section image
  }
  std::vector<ObjId> free_objs;
  for (ObjId k = 0; k < P.num_objects(); ++k)
    if (xobj[k] < 0) free_objs.push_back(k);

  auto try_mors = [&](auto&& self, MorId m) -> bool {
    if (m == P.num_morphisms()) {
      for (MorId g = 0; g < P.num_morphisms(); ++g)
        for (MorId f = 0; f < P.num_morphisms(); ++f)
          if (P.composable(g, f) && xmor[P.compose(g, f)] != A.compose(xmor[g], xmor[f]))
            return false;
      return true;
    }
    budget.charge();
    auto [u, v] = pf.mor_pair[m];
    const auto& strc = pf.objects[P.src(m)];
    const auto& ttrc = pf.objects[P.tgt(m)];
    bool on_section = strc.beta == F.tgt->identity(F.obj_map[strc.a]) &&
                      ttrc.beta == F.tgt->identity(F.obj_map[ttrc.a]) && v == F.mor_map[u];
    for (MorId cand : A.hom(xobj[P.src(m)], xobj[P.tgt(m)])) {
      if (F.mor_map[cand] != v) continue;          // over B
      if (on_section && cand != u) continue;       // x∘s = 1 on morphisms
      if (P.is_identity(m) && cand != A.identity(xobj[P.src(m)])) continue;
      xmor[m] = cand;
      if (self(self, m + 1)) return true;
      xmor[m] = -1;
    }
    return false;
  };
  auto try_objs = [&](auto&& self, std::size_t k) -> bool {
    if (k == free_objs.size()) return try_mors(try_mors, 0);
    budget.charge();
    ObjId p = free_objs[k];
    const auto& tr = pf.objects[p];
    for (ObjId cand = 0; cand < A.num_objects(); ++cand) {
      if (F.obj_map[cand] != tr.b) continue;  // F∘x = q on objects
      xobj[p] = cand;
      if (self(self, k + 1)) return true;
      xobj[p] = -1;
    }
    return false;
  };
  if (!try_objs(try_objs, 0)) return std::nullopt;
  return FinFunctor{pf.cat, F.src, xobj, xmor};
}

inline bool is_normal_isofibration(const FinFunctor& F,
                                   const SearchBudget& budget = default_budget()) {
  if (is_discrete_isofibration(F)) return true;  // unique lifts form a normal cleavage
  if (!is_isofibration(F)) return false;
  return normal_cleavage(F, budget).has_value();
}

}  // namespace fincat
