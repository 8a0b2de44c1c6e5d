#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fincat/core/budget.hpp"

namespace fincat {

using ObjId = int;
using MorId = int;

// An explicit finite category: objects and morphisms carry stable integer
// indices, composition is a total table over composable pairs.  Values are
// immutable once validated and safe to share across threads.
class FinCategory {
public:
  struct Mor {
    std::string name;
    ObjId src = -1;
    ObjId tgt = -1;
  };

  std::vector<std::string> object_names;
  std::vector<Mor> morphisms;
  std::vector<MorId> identities;     // one per object
  std::vector<MorId> compose_table;  // index g * |mor| + f; -1 when not composable

  int num_objects() const { return static_cast<int>(object_names.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  ObjId src(MorId f) const { return morphisms[f].src; }
  ObjId tgt(MorId f) const { return morphisms[f].tgt; }
  MorId identity(ObjId a) const { return identities[a]; }
  bool is_identity(MorId f) const { return identities[morphisms[f].src] == f && morphisms[f].src == morphisms[f].tgt; }

  bool composable(MorId g, MorId f) const { return src(g) == tgt(f); }

  // g after f
  MorId compose(MorId g, MorId f) const {
    return compose_table[static_cast<std::size_t>(g) * morphisms.size() + f];
  }

  std::vector<MorId> hom(ObjId a, ObjId b) const {
    std::vector<MorId> out;
    for (MorId f = 0; f < num_morphisms(); ++f)
      if (src(f) == a && tgt(f) == b) out.push_back(f);
    return out;
  }

  bool is_iso(MorId f) const {
    for (MorId g : hom(tgt(f), src(f)))
      if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(tgt(f)))
        return true;
    return false;
  }

  std::optional<MorId> inverse(MorId f) const {
    for (MorId g : hom(tgt(f), src(f)))
      if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(tgt(f)))
        return g;
    return std::nullopt;
  }

  // isos out of a, including the identity
  std::vector<MorId> isos_from(ObjId a) const {
    std::vector<MorId> out;
    for (MorId f = 0; f < num_morphisms(); ++f)
      if (src(f) == a && is_iso(f)) out.push_back(f);
    return out;
  }

  std::vector<MorId> isos_into(ObjId a) const {
    std::vector<MorId> out;
    for (MorId f = 0; f < num_morphisms(); ++f)
      if (tgt(f) == a && is_iso(f)) out.push_back(f);
    return out;
  }

  std::optional<ObjId> object_index(const std::string& name) const {
    for (ObjId a = 0; a < num_objects(); ++a)
      if (object_names[a] == name) return a;
    return std::nullopt;
  }

  std::optional<MorId> morphism_index(const std::string& name) const {
    for (MorId f = 0; f < num_morphisms(); ++f)
      if (morphisms[f].name == name) return f;
    return std::nullopt;
  }
};

using CatPtr = std::shared_ptr<const FinCategory>;

// ---------------------------------------------------------------------------
// Validation

enum class CatErrorKind {
  BadTable,               // malformed sizes / out-of-range ids
  NonComposablePair,      // compose defined where it must not be, or missing
  AssociativityViolation, // witness triple (h, g, f)
  IdentityViolation,      // witness morphism
};

struct CatError {
  CatErrorKind kind;
  std::string detail;
  std::vector<MorId> witness;  // offending morphism ids, outermost first
};

using CatResult = std::variant<CatPtr, CatError>;

// Raw tables as read from a file; validation promotes them to a FinCategory.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<FinCategory::Mor> morphisms;
  std::vector<MorId> identities;
  // triples (g, f, g∘f)
  std::vector<std::array<MorId, 3>> compose;
};

inline CatResult validate_category(const RawCategory& raw) {
  const int n_obj = static_cast<int>(raw.objects.size());
  const int n_mor = static_cast<int>(raw.morphisms.size());
  auto fail = [](CatErrorKind k, std::string d, std::vector<MorId> w = {}) {
    return CatResult{CatError{k, std::move(d), std::move(w)}};
  };

  for (const auto& m : raw.morphisms)
    if (m.src < 0 || m.src >= n_obj || m.tgt < 0 || m.tgt >= n_obj)
      return fail(CatErrorKind::BadTable, "morphism '" + m.name + "' has out-of-range endpoints");
  if (static_cast<int>(raw.identities.size()) != n_obj)
    return fail(CatErrorKind::BadTable, "identity table must assign one morphism per object");
  for (ObjId a = 0; a < n_obj; ++a) {
    MorId i = raw.identities[a];
    if (i < 0 || i >= n_mor)
      return fail(CatErrorKind::BadTable, "identity of object '" + raw.objects[a] + "' is out of range");
    if (raw.morphisms[i].src != a || raw.morphisms[i].tgt != a)
      return fail(CatErrorKind::IdentityViolation,
                  "identity of '" + raw.objects[a] + "' is not an endomorphism of it", {i});
  }

  auto cat = std::make_shared<FinCategory>();
  cat->object_names = raw.objects;
  cat->morphisms = raw.morphisms;
  cat->identities = raw.identities;
  cat->compose_table.assign(static_cast<std::size_t>(n_mor) * n_mor, -1);

  for (const auto& [g, f, gf] : raw.compose) {
    if (g < 0 || g >= n_mor || f < 0 || f >= n_mor || gf < 0 || gf >= n_mor)
      return fail(CatErrorKind::BadTable, "composition entry references unknown morphism");
    if (cat->src(g) != cat->tgt(f))
      return fail(CatErrorKind::NonComposablePair,
                  "composite given for the non-composable pair (" + cat->morphisms[g].name + ", " +
                      cat->morphisms[f].name + ")",
                  {g, f});
    if (cat->src(gf) != cat->src(f) || cat->tgt(gf) != cat->tgt(g))
      return fail(CatErrorKind::BadTable,
                  "composite of (" + cat->morphisms[g].name + ", " + cat->morphisms[f].name +
                      ") has mismatched endpoints",
                  {g, f});
    cat->compose_table[static_cast<std::size_t>(g) * n_mor + f] = gf;
  }

  // compose must be defined on exactly the composable pairs
  for (MorId g = 0; g < n_mor; ++g)
    for (MorId f = 0; f < n_mor; ++f) {
      bool comp = cat->composable(g, f);
      bool entry = cat->compose(g, f) >= 0;
      if (comp && !entry)
        return fail(CatErrorKind::NonComposablePair,
                    "missing composite for (" + cat->morphisms[g].name + ", " + cat->morphisms[f].name + ")",
                    {g, f});
      if (!comp && entry)
        return fail(CatErrorKind::NonComposablePair,
                    "composite defined for non-composable (" + cat->morphisms[g].name + ", " +
                        cat->morphisms[f].name + ")",
                    {g, f});
    }

  // identity laws
  for (MorId f = 0; f < n_mor; ++f) {
    if (cat->compose(f, cat->identity(cat->src(f))) != f ||
        cat->compose(cat->identity(cat->tgt(f)), f) != f)
      return fail(CatErrorKind::IdentityViolation,
                  "identity law fails at '" + cat->morphisms[f].name + "'", {f});
  }

  // associativity over every composable triple
  for (MorId h = 0; h < n_mor; ++h)
    for (MorId g = 0; g < n_mor; ++g) {
      if (!cat->composable(h, g)) continue;
      for (MorId f = 0; f < n_mor; ++f) {
        if (!cat->composable(g, f)) continue;
        if (cat->compose(cat->compose(h, g), f) != cat->compose(h, cat->compose(g, f)))
          return fail(CatErrorKind::AssociativityViolation,
                      "associativity fails on (" + cat->morphisms[h].name + ", " + cat->morphisms[g].name +
                          ", " + cat->morphisms[f].name + ")",
                      {h, g, f});
      }
    }

  return CatResult{CatPtr(cat)};
}

inline CatPtr validate_or_throw(const RawCategory& raw) {
  auto r = validate_category(raw);
  if (auto* err = std::get_if<CatError>(&r))
    throw std::runtime_error("invalid category: " + err->detail);
  return std::get<CatPtr>(r);
}

// ---------------------------------------------------------------------------
// A small builder so constructions can assemble categories without juggling
// raw index bookkeeping.  finish() runs full validation.

class CategoryBuilder {
public:
  ObjId add_object(std::string name) {
    raw_.objects.push_back(std::move(name));
    raw_.identities.push_back(-1);
    return static_cast<ObjId>(raw_.objects.size()) - 1;
  }
  MorId add_morphism(std::string name, ObjId src, ObjId tgt) {
    raw_.morphisms.push_back({std::move(name), src, tgt});
    return static_cast<MorId>(raw_.morphisms.size()) - 1;
  }
  MorId add_identity(ObjId a, std::string name = "") {
    if (name.empty()) name = "id_" + raw_.objects[a];
    MorId i = add_morphism(std::move(name), a, a);
    raw_.identities[a] = i;
    return i;
  }
  void set_identity(ObjId a, MorId i) { raw_.identities[a] = i; }
  void set_composite(MorId g, MorId f, MorId gf) { raw_.compose.push_back({g, f, gf}); }

  const RawCategory& raw() const { return raw_; }

  CatPtr finish() const { return validate_or_throw(raw_); }
  CatResult try_finish() const { return validate_category(raw_); }

private:
  RawCategory raw_;
};

// ---------------------------------------------------------------------------
// Isomorphism of categories, by search over object bijections pruned by
// hom-set cardinality profiles.  Only intended for tiny instances; guarded
// by a hard cap on objects.

inline bool categories_isomorphic(const FinCategory& a, const FinCategory& b,
                                  std::size_t object_cap = 8) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms())
    return false;
  const int n = a.num_objects();
  if (static_cast<std::size_t>(n) > object_cap)
    throw SizeBudgetExceeded("isomorphism search over more than " + std::to_string(object_cap) +
                             " objects");
  if (n == 0) return true;

  auto profile = [](const FinCategory& c, ObjId x) {
    std::vector<int> outs(c.num_objects()), ins(c.num_objects());
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.src(f) == x) outs[c.tgt(f)]++;
      if (c.tgt(f) == x) ins[c.src(f)]++;
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return std::pair{outs, ins};
  };

  std::vector<ObjId> perm(n, -1);
  std::vector<bool> used(n, false);

  // extend a partial object bijection, then try to match morphisms
  auto match_morphisms = [&](const std::vector<ObjId>& obj_map) {
    const int m = a.num_morphisms();
    std::vector<MorId> mor_map(m, -1);
    std::vector<bool> mor_used(m, false);
    auto rec = [&](auto&& self, MorId f) -> bool {
      if (f == m) {
        for (MorId g = 0; g < m; ++g)
          for (MorId h = 0; h < m; ++h)
            if (a.composable(g, h) &&
                mor_map[a.compose(g, h)] != b.compose(mor_map[g], mor_map[h]))
              return false;
        return true;
      }
      for (MorId c = 0; c < m; ++c) {
        if (mor_used[c]) continue;
        if (b.src(c) != obj_map[a.src(f)] || b.tgt(c) != obj_map[a.tgt(f)]) continue;
        if (a.is_identity(f) != b.is_identity(c)) continue;
        mor_map[f] = c;
        mor_used[c] = true;
        if (self(self, f + 1)) return true;
        mor_used[c] = false;
      }
      return false;
    };
    return rec(rec, 0);
  };

  auto rec_obj = [&](auto&& self, ObjId x) -> bool {
    if (x == n) return match_morphisms(perm);
    auto pa = profile(a, x);
    for (ObjId y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (profile(b, y) != pa) continue;
      perm[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return rec_obj(rec_obj, 0);
}

}  // namespace fincat
