#pragma once

#include <string>
#include <vector>

#include "fincat/core/fin_category.hpp"
#include "fincat/core/fin_functor.hpp"

namespace fincat {

// The empty category.
inline CatPtr empty_cat() {
  static CatPtr c = CategoryBuilder{}.finish();
  return c;
}

// The terminal category 1.
inline CatPtr terminal_cat() {
  static CatPtr c = [] {
    CategoryBuilder b;
    ObjId s = b.add_object("*");
    MorId i = b.add_identity(s);
    b.set_composite(i, i, i);
    return b.finish();
  }();
  return c;
}

// Discrete category on n objects.
inline CatPtr discrete_cat(int n) {
  CategoryBuilder b;
  for (int k = 0; k < n; ++k) {
    ObjId x = b.add_object(std::to_string(k));
    MorId i = b.add_identity(x);
    b.set_composite(i, i, i);
  }
  return b.finish();
}

// The walking arrow 0 -> 1.
inline CatPtr walking_arrow() {
  static CatPtr c = [] {
    CategoryBuilder b;
    ObjId o0 = b.add_object("0");
    ObjId o1 = b.add_object("1");
    MorId i0 = b.add_identity(o0);
    MorId i1 = b.add_identity(o1);
    MorId a = b.add_morphism("a", o0, o1);
    b.set_composite(i0, i0, i0);
    b.set_composite(i1, i1, i1);
    b.set_composite(a, i0, a);
    b.set_composite(i1, a, a);
    return b.finish();
  }();
  return c;
}

// The free isomorphism (often written I): 0 ≅ 1.
inline CatPtr free_iso_cat() {
  static CatPtr c = [] {
    CategoryBuilder b;
    ObjId o0 = b.add_object("0");
    ObjId o1 = b.add_object("1");
    MorId i0 = b.add_identity(o0);
    MorId i1 = b.add_identity(o1);
    MorId f = b.add_morphism("f", o0, o1);
    MorId g = b.add_morphism("g", o1, o0);
    b.set_composite(i0, i0, i0);
    b.set_composite(i1, i1, i1);
    b.set_composite(f, i0, f);
    b.set_composite(i1, f, f);
    b.set_composite(g, i1, g);
    b.set_composite(i0, g, g);
    b.set_composite(g, f, i0);
    b.set_composite(f, g, i1);
    return b.finish();
  }();
  return c;
}

// The parallel pair 0 ⇉ 1.
inline CatPtr parallel_pair_cat() {
  static CatPtr c = [] {
    CategoryBuilder b;
    ObjId o0 = b.add_object("0");
    ObjId o1 = b.add_object("1");
    MorId i0 = b.add_identity(o0);
    MorId i1 = b.add_identity(o1);
    MorId u = b.add_morphism("u", o0, o1);
    MorId v = b.add_morphism("v", o0, o1);
    b.set_composite(i0, i0, i0);
    b.set_composite(i1, i1, i1);
    for (MorId w : {u, v}) {
      b.set_composite(w, i0, w);
      b.set_composite(i1, w, w);
    }
    return b.finish();
  }();
  return c;
}

// The linear order 0 -> 1 -> ... -> (n-1), as a poset category.
inline CatPtr chain_cat(int n) {
  CategoryBuilder b;
  std::vector<ObjId> obj(n);
  for (int k = 0; k < n; ++k) obj[k] = b.add_object(std::to_string(k));
  // one morphism x<=y
  std::vector<std::vector<MorId>> m(n, std::vector<MorId>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      if (x == y)
        m[x][y] = b.add_identity(obj[x]);
      else
        m[x][y] = b.add_morphism("le_" + std::to_string(x) + "_" + std::to_string(y), obj[x], obj[y]);
    }
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      for (int z = y; z < n; ++z)
        b.set_composite(m[y][z], m[x][y], m[x][z]);
  return b.finish();
}

// A finite poset presented by its order relation; objects named by index.
// leq must be reflexive and transitive.
inline CatPtr poset_cat(int n, const std::vector<std::pair<int, int>>& strictly_less) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) le[x][x] = true;
  for (auto [x, y] : strictly_less) le[x][y] = true;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (le[x][k] && le[k][y]) le[x][y] = true;
  CategoryBuilder b;
  std::vector<ObjId> obj(n);
  for (int k = 0; k < n; ++k) obj[k] = b.add_object("p" + std::to_string(k));
  std::vector<std::vector<MorId>> m(n, std::vector<MorId>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!le[x][y]) continue;
      if (x == y)
        m[x][y] = b.add_identity(obj[x]);
      else
        m[x][y] = b.add_morphism("le_" + std::to_string(x) + "_" + std::to_string(y), obj[x], obj[y]);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (le[x][y] && le[y][z]) b.set_composite(m[y][z], m[x][y], m[x][z]);
  return b.finish();
}

// Product of two categories.
inline CatPtr product_cat(CatPtr a, CatPtr b) {
  const auto& A = *a;
  const auto& B = *b;
  CategoryBuilder bl;
  for (ObjId x = 0; x < A.num_objects(); ++x)
    for (ObjId y = 0; y < B.num_objects(); ++y)
      bl.add_object("(" + A.object_names[x] + "," + B.object_names[y] + ")");
  auto obj = [&](ObjId x, ObjId y) { return x * B.num_objects() + y; };
  auto mor = [&](MorId f, MorId g) { return f * B.num_morphisms() + g; };
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    for (MorId g = 0; g < B.num_morphisms(); ++g) {
      MorId id = bl.add_morphism("(" + A.morphisms[f].name + "," + B.morphisms[g].name + ")",
                                 obj(A.src(f), B.src(g)), obj(A.tgt(f), B.tgt(g)));
      (void)id;
    }
  for (ObjId x = 0; x < A.num_objects(); ++x)
    for (ObjId y = 0; y < B.num_objects(); ++y)
      bl.set_identity(obj(x, y), mor(A.identity(x), B.identity(y)));
  for (MorId f2 = 0; f2 < A.num_morphisms(); ++f2)
    for (MorId g2 = 0; g2 < B.num_morphisms(); ++g2)
      for (MorId f1 = 0; f1 < A.num_morphisms(); ++f1)
        for (MorId g1 = 0; g1 < B.num_morphisms(); ++g1)
          if (A.composable(f2, f1) && B.composable(g2, g1))
            bl.set_composite(mor(f2, g2), mor(f1, g1), mor(A.compose(f2, f1), B.compose(g2, g1)));
  return bl.finish();
}

inline FinFunctor product_proj1(CatPtr prod, CatPtr a, CatPtr b) {
  FinFunctor F{prod, a, {}, {}};
  const auto& B = *b;
  F.obj_map.resize(prod->num_objects());
  F.mor_map.resize(prod->num_morphisms());
  for (ObjId p = 0; p < prod->num_objects(); ++p) F.obj_map[p] = p / B.num_objects();
  for (MorId m = 0; m < prod->num_morphisms(); ++m) F.mor_map[m] = m / B.num_morphisms();
  return F;
}

inline FinFunctor product_proj2(CatPtr prod, CatPtr a, CatPtr b) {
  (void)a;
  FinFunctor F{prod, b, {}, {}};
  const auto& B = *b;
  F.obj_map.resize(prod->num_objects());
  F.mor_map.resize(prod->num_morphisms());
  for (ObjId p = 0; p < prod->num_objects(); ++p) F.obj_map[p] = p % B.num_objects();
  for (MorId m = 0; m < prod->num_morphisms(); ++m) F.mor_map[m] = m % B.num_morphisms();
  return F;
}

// pairing <F,G> : X -> A×B of two functors with common source
inline FinFunctor pair_into_product(const FinFunctor& F, const FinFunctor& G, CatPtr prod) {
  FinFunctor H{F.src, prod, {}, {}};
  const auto& B = *G.tgt;
  H.obj_map.resize(F.obj_map.size());
  H.mor_map.resize(F.mor_map.size());
  for (std::size_t x = 0; x < F.obj_map.size(); ++x)
    H.obj_map[x] = F.obj_map[x] * B.num_objects() + G.obj_map[x];
  for (std::size_t f = 0; f < F.mor_map.size(); ++f)
    H.mor_map[f] = F.mor_map[f] * B.num_morphisms() + G.mor_map[f];
  return H;
}

// functor 1 -> B selecting an object
inline FinFunctor select_object(CatPtr b, ObjId x) {
  return FinFunctor{terminal_cat(), b, {x}, {b->identity(x)}};
}

// the unique functor A -> 1
inline FinFunctor to_terminal(CatPtr a) {
  FinFunctor F{a, terminal_cat(), {}, {}};
  F.obj_map.assign(a->num_objects(), 0);
  F.mor_map.assign(a->num_morphisms(), 0);
  return F;
}

// the unique functor ∅ -> B
inline FinFunctor from_empty(CatPtr b) { return FinFunctor{empty_cat(), b, {}, {}}; }

// A one-object category from a finite monoid given by its multiplication
// table (element 0 is the unit; table[i][j] = i*j means "i after j").
inline CatPtr monoid_cat(const std::vector<std::vector<int>>& table, const std::string& name = "m") {
  const int n = static_cast<int>(table.size());
  CategoryBuilder b;
  ObjId star = b.add_object("*");
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      b.add_identity(star, name + "0");
    else
      b.add_morphism(name + std::to_string(k), star, star);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b.set_composite(i, j, table[i][j]);
  return b.finish();
}

}  // namespace fincat
