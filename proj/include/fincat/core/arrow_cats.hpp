#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fincat/core/fin_category.hpp"
#include "fincat/core/fin_functor.hpp"
#include "fincat/core/standard_cats.hpp"

namespace fincat {

// Categories of arrows, isomorphisms, pseudolimit triples and comma triples
// over explicit finite categories.  These are the raw constructions; the
// limits module wraps them in cones and verifies universal properties.

// A category whose objects are selected arrows of A and whose morphisms are
// commuting squares (w0, w1) : u -> v with v∘w0 = w1∘u.
struct ArrowCat {
  CatPtr cat;
  CatPtr base;
  FinFunctor dom, cod;                              // projections to A
  std::vector<MorId> object_arrow;                  // object -> arrow of A
  std::vector<std::pair<MorId, MorId>> mor_square;  // morphism -> (w0, w1)

  ObjId object_of(MorId u) const {
    for (ObjId k = 0; k < static_cast<ObjId>(object_arrow.size()); ++k)
      if (object_arrow[k] == u) return k;
    return -1;
  }
  MorId morphism_of(ObjId s, ObjId t, MorId w0, MorId w1) const {
    for (MorId m = 0; m < static_cast<MorId>(mor_square.size()); ++m)
      if (cat->src(m) == s && cat->tgt(m) == t && mor_square[m].first == w0 &&
          mor_square[m].second == w1)
        return m;
    return -1;
  }
};

inline ArrowCat squares_category(CatPtr a, std::vector<MorId> arrows) {
  const auto& A = *a;
  ArrowCat out;
  out.base = a;
  out.object_arrow = std::move(arrows);
  CategoryBuilder b;
  for (MorId u : out.object_arrow) b.add_object("[" + A.morphisms[u].name + "]");

  struct Sq {
    MorId w0, w1;
    ObjId s, t;
  };
  std::vector<Sq> squares;
  const int n = static_cast<int>(out.object_arrow.size());
  for (ObjId s = 0; s < n; ++s)
    for (ObjId t = 0; t < n; ++t) {
      MorId u = out.object_arrow[s], v = out.object_arrow[t];
      for (MorId w0 : A.hom(A.src(u), A.src(v)))
        for (MorId w1 : A.hom(A.tgt(u), A.tgt(v)))
          if (A.compose(v, w0) == A.compose(w1, u)) squares.push_back({w0, w1, s, t});
    }
  for (const auto& sq : squares) {
    MorId u = out.object_arrow[sq.s];
    MorId m = b.add_morphism("(" + A.morphisms[sq.w0].name + "," + A.morphisms[sq.w1].name + ")",
                             sq.s, sq.t);
    out.mor_square.emplace_back(sq.w0, sq.w1);
    if (sq.s == sq.t && sq.w0 == A.identity(A.src(u)) && sq.w1 == A.identity(A.tgt(u)))
      b.set_identity(sq.s, m);
  }
  auto find_square = [&](ObjId s, ObjId t, MorId w0, MorId w1) -> MorId {
    for (MorId m = 0; m < static_cast<MorId>(squares.size()); ++m)
      if (squares[m].s == s && squares[m].t == t && squares[m].w0 == w0 && squares[m].w1 == w1)
        return m;
    return -1;
  };
  for (MorId m2 = 0; m2 < static_cast<MorId>(squares.size()); ++m2)
    for (MorId m1 = 0; m1 < static_cast<MorId>(squares.size()); ++m1)
      if (squares[m1].t == squares[m2].s)
        b.set_composite(m2, m1,
                        find_square(squares[m1].s, squares[m2].t,
                                    A.compose(squares[m2].w0, squares[m1].w0),
                                    A.compose(squares[m2].w1, squares[m1].w1)));
  out.cat = b.finish();
  out.dom = FinFunctor{out.cat, a, {}, {}};
  out.cod = FinFunctor{out.cat, a, {}, {}};
  for (MorId u : out.object_arrow) {
    out.dom.obj_map.push_back(A.src(u));
    out.cod.obj_map.push_back(A.tgt(u));
  }
  for (const auto& [w0, w1] : out.mor_square) {
    out.dom.mor_map.push_back(w0);
    out.cod.mor_map.push_back(w1);
  }
  return out;
}

// The arrow category A^2 over all arrows of A.
inline ArrowCat arrow_category(CatPtr a) {
  std::vector<MorId> all(a->num_morphisms());
  for (MorId u = 0; u < a->num_morphisms(); ++u) all[u] = u;
  return squares_category(a, std::move(all));
}

// The iso path category A^I on the invertible arrows of A.
inline ArrowCat iso_path_category(CatPtr a) {
  std::vector<MorId> isos;
  for (MorId u = 0; u < a->num_morphisms(); ++u)
    if (a->is_iso(u)) isos.push_back(u);
  return squares_category(a, std::move(isos));
}

// ---------------------------------------------------------------------------
// The pseudolimit of an arrow f : A -> B.  Objects are triples
// (a, β : fa ≅ b, b); a morphism (u,v) : (a,β,b) -> (a',β',b') is a pair
// with β'∘f(u) = v∘β.
struct PseudolimitData {
  CatPtr cat;
  FinFunctor p, q;    // projections to A and B
  FinFunctor s;       // canonical section of p, a ↦ (a, id, fa)
  NatTransf lambda;   // invertible 2-cell f∘p ⇒ q with component β at (a,β,b)
  struct Triple {
    ObjId a;
    MorId beta;
    ObjId b;
  };
  std::vector<Triple> objects;
  std::vector<std::pair<MorId, MorId>> mor_pair;

  ObjId object_of(ObjId a, MorId beta, ObjId b) const {
    for (ObjId k = 0; k < static_cast<ObjId>(objects.size()); ++k)
      if (objects[k].a == a && objects[k].beta == beta && objects[k].b == b) return k;
    return -1;
  }
  MorId morphism_of(ObjId s_, ObjId t_, MorId u, MorId v) const {
    for (MorId m = 0; m < static_cast<MorId>(mor_pair.size()); ++m)
      if (cat->src(m) == s_ && cat->tgt(m) == t_ && mor_pair[m].first == u &&
          mor_pair[m].second == v)
        return m;
    return -1;
  }
};

inline PseudolimitData pseudolimit_data(const FinFunctor& f,
                                        const SearchBudget& budget = default_budget()) {
  const auto& A = *f.src;
  const auto& B = *f.tgt;
  PseudolimitData out;
  CategoryBuilder b;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId beta = 0; beta < B.num_morphisms(); ++beta) {
      if (B.src(beta) != f.obj_map[a] || !B.is_iso(beta)) continue;
      out.objects.push_back({a, beta, B.tgt(beta)});
      b.add_object("(" + A.object_names[a] + "," + B.morphisms[beta].name + ")");
    }
  budget.require_objects(out.objects.size());
  const int n = static_cast<int>(out.objects.size());
  struct Sq {
    MorId u, v;
    ObjId s, t;
  };
  std::vector<Sq> squares;
  for (ObjId s = 0; s < n; ++s)
    for (ObjId t = 0; t < n; ++t) {
      const auto& x = out.objects[s];
      const auto& y = out.objects[t];
      for (MorId u : A.hom(x.a, y.a))
        for (MorId v : B.hom(x.b, y.b))
          if (B.compose(y.beta, f.mor_map[u]) == B.compose(v, x.beta))
            squares.push_back({u, v, s, t});
    }
  budget.require_morphisms(squares.size());
  for (const auto& sq : squares) {
    const auto& x = out.objects[sq.s];
    MorId m = b.add_morphism("(" + A.morphisms[sq.u].name + "," + B.morphisms[sq.v].name + ")",
                             sq.s, sq.t);
    out.mor_pair.emplace_back(sq.u, sq.v);
    if (sq.s == sq.t && sq.u == A.identity(x.a) && sq.v == B.identity(x.b))
      b.set_identity(sq.s, m);
  }
  auto find_square = [&](ObjId s, ObjId t, MorId u, MorId v) -> MorId {
    for (MorId m = 0; m < static_cast<MorId>(squares.size()); ++m)
      if (squares[m].s == s && squares[m].t == t && squares[m].u == u && squares[m].v == v)
        return m;
    return -1;
  };
  for (MorId m2 = 0; m2 < static_cast<MorId>(squares.size()); ++m2)
    for (MorId m1 = 0; m1 < static_cast<MorId>(squares.size()); ++m1)
      if (squares[m1].t == squares[m2].s)
        b.set_composite(m2, m1,
                        find_square(squares[m1].s, squares[m2].t,
                                    A.compose(squares[m2].u, squares[m1].u),
                                    B.compose(squares[m2].v, squares[m1].v)));
  out.cat = b.finish();

  out.p = FinFunctor{out.cat, f.src, {}, {}};
  out.q = FinFunctor{out.cat, f.tgt, {}, {}};
  for (const auto& tr : out.objects) {
    out.p.obj_map.push_back(tr.a);
    out.q.obj_map.push_back(tr.b);
  }
  for (const auto& [u, v] : out.mor_pair) {
    out.p.mor_map.push_back(u);
    out.q.mor_map.push_back(v);
  }

  out.s = FinFunctor{f.src, out.cat, {}, {}};
  for (ObjId a = 0; a < A.num_objects(); ++a)
    out.s.obj_map.push_back(out.object_of(a, B.identity(f.obj_map[a]), f.obj_map[a]));
  for (MorId u = 0; u < A.num_morphisms(); ++u)
    out.s.mor_map.push_back(
        out.morphism_of(out.s.obj_map[A.src(u)], out.s.obj_map[A.tgt(u)], u, f.mor_map[u]));

  out.lambda = NatTransf{compose(f, out.p), out.q, {}};
  for (const auto& tr : out.objects) out.lambda.components.push_back(tr.beta);
  return out;
}

// ---------------------------------------------------------------------------
// The comma category f/g of a cospan f : A -> C <- B : g.  Objects are
// triples (a, φ : fa -> gb, b); φ need not be invertible.
struct CommaData {
  CatPtr cat;
  FinFunctor p, q;    // projections to A and B
  NatTransf lambda;   // 2-cell f∘p ⇒ g∘q
  struct Triple {
    ObjId a;
    MorId phi;
    ObjId b;
  };
  std::vector<Triple> objects;
  std::vector<std::pair<MorId, MorId>> mor_pair;

  ObjId object_of(ObjId a, MorId phi, ObjId b) const {
    for (ObjId k = 0; k < static_cast<ObjId>(objects.size()); ++k)
      if (objects[k].a == a && objects[k].phi == phi && objects[k].b == b) return k;
    return -1;
  }
};

inline CommaData comma_data(const FinFunctor& f, const FinFunctor& g,
                            const SearchBudget& budget = default_budget()) {
  if (!(f.tgt == g.tgt))
    throw std::runtime_error("comma requires a cospan with a common codomain");
  const auto& A = *f.src;
  const auto& B = *g.src;
  const auto& C = *f.tgt;
  CommaData out;
  CategoryBuilder bl;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (ObjId b = 0; b < B.num_objects(); ++b)
      for (MorId phi : C.hom(f.obj_map[a], g.obj_map[b])) {
        out.objects.push_back({a, phi, b});
        bl.add_object("(" + A.object_names[a] + "," + C.morphisms[phi].name + "," +
                      B.object_names[b] + ")");
      }
  budget.require_objects(out.objects.size());
  const int n = static_cast<int>(out.objects.size());
  struct Sq {
    MorId u, v;
    ObjId s, t;
  };
  std::vector<Sq> squares;
  for (ObjId s = 0; s < n; ++s)
    for (ObjId t = 0; t < n; ++t) {
      const auto& x = out.objects[s];
      const auto& y = out.objects[t];
      for (MorId u : A.hom(x.a, y.a))
        for (MorId v : B.hom(x.b, y.b))
          if (C.compose(y.phi, f.mor_map[u]) == C.compose(g.mor_map[v], x.phi))
            squares.push_back({u, v, s, t});
    }
  budget.require_morphisms(squares.size());
  for (const auto& sq : squares) {
    const auto& x = out.objects[sq.s];
    MorId m = bl.add_morphism("(" + A.morphisms[sq.u].name + "," + B.morphisms[sq.v].name + ")",
                              sq.s, sq.t);
    out.mor_pair.emplace_back(sq.u, sq.v);
    if (sq.s == sq.t && sq.u == A.identity(x.a) && sq.v == B.identity(x.b))
      bl.set_identity(sq.s, m);
  }
  auto find_square = [&](ObjId s, ObjId t, MorId u, MorId v) -> MorId {
    for (MorId m = 0; m < static_cast<MorId>(squares.size()); ++m)
      if (squares[m].s == s && squares[m].t == t && squares[m].u == u && squares[m].v == v)
        return m;
    return -1;
  };
  for (MorId m2 = 0; m2 < static_cast<MorId>(squares.size()); ++m2)
    for (MorId m1 = 0; m1 < static_cast<MorId>(squares.size()); ++m1)
      if (squares[m1].t == squares[m2].s)
        bl.set_composite(m2, m1,
                         find_square(squares[m1].s, squares[m2].t,
                                     A.compose(squares[m2].u, squares[m1].u),
                                     B.compose(squares[m2].v, squares[m1].v)));
  out.cat = bl.finish();
  out.p = FinFunctor{out.cat, f.src, {}, {}};
  out.q = FinFunctor{out.cat, g.src, {}, {}};
  for (const auto& tr : out.objects) {
    out.p.obj_map.push_back(tr.a);
    out.q.obj_map.push_back(tr.b);
  }
  for (const auto& [u, v] : out.mor_pair) {
    out.p.mor_map.push_back(u);
    out.q.mor_map.push_back(v);
  }
  out.lambda = NatTransf{compose(f, out.p), compose(g, out.q), {}};
  for (const auto& tr : out.objects) out.lambda.components.push_back(tr.phi);
  return out;
}

}  // namespace fincat
