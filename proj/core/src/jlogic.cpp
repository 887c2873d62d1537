#include "glpwb/jlogic.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace glpwb {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

// below[r][w]: the worlds a with a <_r w.
struct Relations {
  std::size_t worlds = 0;
  std::vector<std::vector<Mask>> below;
};

Relations to_relations(const JFrame& f) {
  if (f.worlds.size() > 64) throw DomainError("frames are limited to 64 worlds");
  Relations r;
  r.worlds = f.worlds.size();
  r.below.assign(f.relations.size(), std::vector<Mask>(r.worlds, 0));
  for (std::size_t n = 0; n < f.relations.size(); ++n) {
    for (const auto& [a, b] : f.relations[n]) {
      if (a >= r.worlds || b >= r.worlds) throw DomainError("edge refers to an unknown world");
      r.below[n][b] |= bit(a);
    }
  }
  return r;
}

bool transitive(const std::vector<Mask>& below) {
  for (std::size_t w = 0; w < below.size(); ++w) {
    for (Mask m = below[w]; m; m &= m - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
      if ((below[v] & ~below[w]) != 0) return false;
    }
  }
  return true;
}

std::vector<Mask> closure(std::vector<Mask> below) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < below.size(); ++w) {
      Mask acc = below[w];
      for (Mask m = below[w]; m; m &= m - 1) acc |= below[static_cast<std::size_t>(std::countr_zero(m))];
      if (acc != below[w]) {
        below[w] = acc;
        changed = true;
      }
    }
  }
  return below;
}

bool well_founded(const std::vector<Mask>& below) {
  const std::vector<Mask> c = closure(below);
  for (std::size_t w = 0; w < c.size(); ++w) {
    if (c[w] & bit(w)) return false;
  }
  return true;
}

std::string edge_name(const JFrame& f, std::size_t a, std::size_t n, std::size_t b) {
  return f.worlds[a] + " <_" + std::to_string(n) + " " + f.worlds[b];
}

// Union-find classes of the symmetric closure of the relations >= n.
std::vector<std::size_t> classes(const Relations& r, std::size_t n) {
  std::vector<std::size_t> parent(r.worlds);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t m = n; m < r.below.size(); ++m) {
    for (std::size_t w = 0; w < r.worlds; ++w) {
      for (Mask s = r.below[m][w]; s; s &= s - 1)
        parent[find(static_cast<std::size_t>(std::countr_zero(s)))] = find(w);
    }
  }
  std::vector<std::size_t> out(r.worlds);
  for (std::size_t w = 0; w < r.worlds; ++w) out[w] = find(w);
  return out;
}

}  // namespace

std::vector<std::string> validate_j_frame(const JFrame& f) {
  const Relations r = to_relations(f);
  std::vector<std::string> out;
  for (std::size_t n = 0; n < r.below.size(); ++n) {
    const auto& bn = r.below[n];
    if (!transitive(bn)) out.push_back("relation " + std::to_string(n) + " is not transitive");
    if (!well_founded(bn)) out.push_back("relation " + std::to_string(n) + " has a cycle");
  }
  for (std::size_t n = 0; n < r.below.size(); ++n) {
    for (std::size_t m = n + 1; m < r.below.size(); ++m) {
      for (std::size_t v = 0; v < r.worlds; ++v) {
        for (Mask s = r.below[m][v]; s; s &= s - 1) {
          const std::size_t w = static_cast<std::size_t>(std::countr_zero(s));
          if (r.below[n][w] != r.below[n][v]) {
            out.push_back(edge_name(f, w, m, v) + " but <_" + std::to_string(n) +
                          " predecessors differ");
          }
        }
      }
      // w <_m v <_n u implies w <_n u
      for (std::size_t u = 0; u < r.worlds; ++u) {
        for (Mask s = r.below[n][u]; s; s &= s - 1) {
          const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
          const Mask missing = r.below[m][v] & ~r.below[n][u];
          for (Mask t = missing; t; t &= t - 1) {
            const std::size_t w = static_cast<std::size_t>(std::countr_zero(t));
            out.push_back(edge_name(f, w, m, v) + " and " + edge_name(f, v, n, u) + " but not " +
                          edge_name(f, w, n, u));
          }
        }
      }
    }
  }
  return out;
}

bool is_treelike(const JFrame& f) {
  const std::vector<std::string> violations = validate_j_frame(f);
  if (!violations.empty()) throw DomainError("not a J-frame: " + violations.front());
  const Relations r = to_relations(f);
  const std::size_t levels = std::max<std::size_t>(r.below.size(), 1);
  for (std::size_t n = 0; n < levels; ++n) {
    const std::vector<std::size_t> outer = classes(r, n);
    const std::vector<std::size_t> inner = classes(r, n + 1);
    const std::vector<Mask> empty(r.worlds, 0);
    const std::vector<Mask>& bn = n < r.below.size() ? r.below[n] : empty;

    // Members of each inner class, keyed by representative.
    std::map<std::size_t, Mask> members;
    for (std::size_t w = 0; w < r.worlds; ++w) members[inner[w]] |= bit(w);
    // Quotient relation: A below B iff some a in A is <_n some b in B.
    std::map<std::size_t, std::map<std::size_t, bool>> below;
    auto q = [&](std::size_t a, std::size_t b) {
      auto it = below.find(a);
      return it != below.end() && it->second.count(b) != 0;
    };
    for (std::size_t w = 0; w < r.worlds; ++w) {
      for (Mask s = bn[w]; s; s &= s - 1) {
        const std::size_t a = static_cast<std::size_t>(std::countr_zero(s));
        below[inner[a]][inner[w]] = true;
      }
    }
    for (const auto& [a, ups] : below) {
      for (const auto& [b, unused] : ups) {
        (void)unused;
        if (a == b) return false;
        // Related classes must be related world by world.
        for (Mask t = members[b]; t; t &= t - 1) {
          if ((bn[static_cast<std::size_t>(std::countr_zero(t))] & members[a]) != members[a])
            return false;
        }
      }
    }
    // Each outer class, viewed as a set of inner classes, must be a tree.
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (const auto& [rep, unused] : members) {
      (void)unused;
      groups[outer[rep]].push_back(rep);
    }
    for (const auto& [o, nodes] : groups) {
      (void)o;
      std::size_t roots = 0;
      for (std::size_t a : nodes) {
        std::vector<std::size_t> ups;
        for (std::size_t b : nodes) {
          if (q(a, b)) ups.push_back(b);
        }
        if (ups.empty()) ++roots;
        for (std::size_t b : ups) {
          for (std::size_t c : ups) {
            if (b != c && !q(b, c) && !q(c, b)) return false;
          }
          for (std::size_t c : nodes) {
            if (q(b, c) && !q(a, c)) return false;
          }
        }
      }
      if (roots != 1) return false;
    }
  }
  return true;
}

namespace {

Mask eval_mask(const Relations& r, const std::map<std::string, Mask>& val, const FormulaPtr& f) {
  using Op = Formula::Op;
  const Mask all = r.worlds == 64 ? ~Mask{0} : bit(r.worlds) - 1;
  auto relation = [&](const Ordinal& idx) -> const std::vector<Mask>& {
    if (!idx.is_finite() || idx.as_nat() >= r.below.size())
      throw DomainError("modal index " + render(idx) + " out of range");
    return r.below[idx.as_nat()];
  };
  switch (f->op) {
    case Op::Top:
      return all;
    case Op::Bot:
      return 0;
    case Op::Var: {
      auto it = val.find(f->name);
      return it == val.end() ? 0 : it->second;
    }
    case Op::Not:
      return all & ~eval_mask(r, val, f->left);
    case Op::And:
      return eval_mask(r, val, f->left) & eval_mask(r, val, f->right);
    case Op::Or:
      return eval_mask(r, val, f->left) | eval_mask(r, val, f->right);
    case Op::Imp:
      return (all & ~eval_mask(r, val, f->left)) | eval_mask(r, val, f->right);
    case Op::Dia: {
      const auto& rel = relation(f->index);
      const Mask s = eval_mask(r, val, f->left);
      Mask out = 0;
      for (std::size_t w = 0; w < r.worlds; ++w) {
        if (rel[w] & s) out |= bit(w);
      }
      return out;
    }
    case Op::Box: {
      const auto& rel = relation(f->index);
      const Mask s = eval_mask(r, val, f->left);
      Mask out = 0;
      for (std::size_t w = 0; w < r.worlds; ++w) {
        if ((rel[w] & ~s) == 0) out |= bit(w);
      }
      return out;
    }
  }
  return 0;
}

std::map<std::string, Mask> valuation_masks(const JModel& m) {
  std::map<std::string, Mask> out;
  for (const auto& [name, ws] : m.valuation) {
    Mask s = 0;
    for (std::size_t w : ws) {
      if (w >= m.frame.worlds.size()) throw DomainError("valuation refers to an unknown world");
      s |= bit(w);
    }
    out[name] = s;
  }
  return out;
}

}  // namespace

std::uint64_t truth_set(const JModel& m, const FormulaPtr& phi) {
  return eval_mask(to_relations(m.frame), valuation_masks(m), phi);
}

bool model_check(const JModel& m, std::size_t world, const FormulaPtr& phi) {
  if (world >= m.frame.worlds.size()) throw DomainError("unknown world");
  return (truth_set(m, phi) & bit(world)) != 0;
}

FormulaPtr m_plus(const FormulaPtr& phi, std::optional<std::uint64_t> top_index) {
  using Op = Formula::Op;
  std::uint64_t n_top = 0;
  for (const Ordinal& i : modal_indices(phi)) {
    if (!i.is_finite()) throw DomainError("m_plus needs natural modal indices; condense first");
    n_top = std::max(n_top, i.as_nat());
  }
  if (top_index) n_top = *top_index;

  // Boxed subformulas [n]psi, reading <n>chi as ~[n]~chi.
  std::vector<std::pair<std::uint64_t, FormulaPtr>> boxes;
  std::function<void(const FormulaPtr&)> collect = [&](const FormulaPtr& f) {
    if (!f) return;
    if (f->op == Op::Box || f->op == Op::Dia) {
      FormulaPtr body = f->op == Op::Box ? f->left : neg(f->left);
      const std::uint64_t n = f->index.as_nat();
      const bool seen = std::any_of(boxes.begin(), boxes.end(), [&](const auto& b) {
        return b.first == n && equal(b.second, body);
      });
      if (!seen) boxes.emplace_back(n, body);
    }
    collect(f->left);
    collect(f->right);
  };
  collect(phi);

  std::vector<FormulaPtr> parts;
  for (const auto& [n, psi] : boxes) {
    for (std::uint64_t m = n + 1; m <= n_top; ++m)
      parts.push_back(imp(box(Ordinal::nat(n), psi), box(Ordinal::nat(m), psi)));
  }
  if (parts.empty()) return top();
  const FormulaPtr mm = conj_all(parts);
  std::vector<FormulaPtr> plus{mm};
  for (std::uint64_t n = 0; n <= n_top; ++n) plus.push_back(box(Ordinal::nat(n), mm));
  return conj_all(plus);
}

// ---------------------------------------------------------------------------
// Tree-like frame enumeration
//
// A connected tree-like frame over relations 0..top is a level-0 shape, where
// a level-n shape (n <= top) is a rooted tree whose nodes carry level-(n+1)
// shapes and a level-(top+1) shape is a single world. Every world of a node
// is <_n every world of each ancestor node.

namespace {

struct Shape {
  std::size_t root = 0;  // index into the next level's shapes
  std::vector<std::size_t> children;  // indices into this level's shapes
  std::size_t size = 1;
};

class ShapeCatalog {
 public:
  ShapeCatalog(std::size_t top, std::size_t max_worlds) : top_(top), levels_(top + 2) {
    levels_[top + 1].push_back(Shape{});
    for (std::size_t n = top + 1; n-- > 0;) build(n, max_worlds);
  }

  const std::vector<Shape>& level(std::size_t n) const { return levels_[n]; }

  // Appends the worlds of shape s at level n to frame f, returning them.
  Mask emit(std::size_t n, std::size_t s, JFrame& f) const {
    if (n == top_ + 1) {
      const std::size_t id = f.worlds.size();
      f.worlds.push_back("w" + std::to_string(id));
      return bit(id);
    }
    const Shape& sh = levels_[n][s];
    const Mask rootw = emit(n + 1, sh.root, f);
    Mask all = rootw;
    for (std::size_t c : sh.children) {
      const Mask sub = emit(n, c, f);
      for (Mask a = sub; a; a &= a - 1) {
        for (Mask b = rootw; b; b &= b - 1) {
          f.relations[n].emplace_back(static_cast<std::size_t>(std::countr_zero(a)),
                                      static_cast<std::size_t>(std::countr_zero(b)));
        }
      }
      all |= sub;
    }
    return all;
  }

 private:
  void build(std::size_t n, std::size_t max_worlds) {
    std::vector<Shape>& out = levels_[n];
    const std::vector<Shape>& next = levels_[n + 1];
    for (std::size_t size = 1; size <= max_worlds; ++size) {
      // Shapes of smaller size are already in `out`, ordered by size.
      const std::size_t existing = out.size();
      for (std::size_t ri = 0; ri < next.size(); ++ri) {
        const std::size_t rs = next[ri].size;
        if (rs > size) continue;
        std::vector<std::size_t> kids;
        std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t remaining,
                                                                 std::size_t bound) {
          if (remaining == 0) {
            out.push_back(Shape{ri, kids, size});
            return;
          }
          for (std::size_t c = std::min(bound, existing); c-- > 0;) {
            if (out[c].size > remaining) continue;
            kids.push_back(c);
            pick(remaining - out[c].size, c + 1);
            kids.pop_back();
          }
        };
        pick(size - rs, existing);
      }
    }
  }

  std::size_t top_;
  std::vector<std::vector<Shape>> levels_;
};

}  // namespace

std::vector<JFrame> treelike_frames(std::size_t worlds, std::size_t top) {
  if (worlds == 0 || worlds > 64) throw DomainError("world count must be in 1..64");
  const ShapeCatalog cat(top, worlds);
  std::vector<JFrame> out;
  for (std::size_t s = 0; s < cat.level(0).size(); ++s) {
    if (cat.level(0)[s].size != worlds) continue;
    JFrame f;
    f.relations.resize(top + 1);
    cat.emit(0, s, f);
    for (auto& rel : f.relations) std::sort(rel.begin(), rel.end());
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<SatResult> bounded_sat(const FormulaPtr& phi, std::size_t max_worlds) {
  std::uint64_t top = 0;
  for (const Ordinal& i : modal_indices(phi)) {
    if (!i.is_finite()) throw DomainError("bounded_sat needs natural modal indices; condense first");
    top = std::max(top, i.as_nat());
  }
  const std::set<std::string> vars_set = variables(phi);
  const std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  for (std::size_t k = 1; k <= max_worlds; ++k) {
    if (vars.size() * k >= 63) throw DomainError("too many valuation bits for bounded_sat");
    for (JFrame& f : treelike_frames(k, top)) {
      const Relations r = to_relations(f);
      const std::uint64_t combos = std::uint64_t{1} << (vars.size() * k);
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::map<std::string, Mask> val;
        for (std::size_t v = 0; v < vars.size(); ++v)
          val[vars[v]] = (code >> (v * k)) & (bit(k) - 1);
        const Mask sat = eval_mask(r, val, phi);
        if (sat == 0) continue;
        SatResult res;
        res.model.frame = std::move(f);
        for (const auto& [name, m] : val) {
          std::vector<std::size_t> ws;
          for (std::size_t w = 0; w < k; ++w) {
            if (m & bit(w)) ws.push_back(w);
          }
          res.model.valuation[name] = std::move(ws);
        }
        res.world = static_cast<std::size_t>(std::countr_zero(sat));
        return res;
      }
    }
  }
  return std::nullopt;
}

namespace {

bool glp_conditions(const Relations& r) {
  for (const auto& rel : r.below) {
    if (!transitive(rel) || !well_founded(rel)) return false;
  }
  for (std::size_t x = 0; x < r.below.size(); ++x) {
    for (std::size_t z = x + 1; z < r.below.size(); ++z) {
      for (std::size_t w = 0; w < r.worlds; ++w) {
        if ((r.below[z][w] & ~r.below[x][w]) != 0) return false;
        // v <_z w and u <_x w imply u <_x v
        for (Mask s = r.below[z][w]; s; s &= s - 1) {
          const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
          if ((r.below[x][w] & ~r.below[x][v]) != 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool glp_frame_triviality(const JFrame& f) { return glp_conditions(to_relations(f)); }

TrivialitySweep glp_triviality_sweep(std::size_t max_worlds, std::size_t relations) {
  TrivialitySweep out;
  for (std::size_t k = 1; k <= max_worlds; ++k) {
    const std::size_t pairs = k * k;
    if (pairs * relations >= 63) throw DomainError("sweep too large");
    const std::uint64_t total = std::uint64_t{1} << (pairs * relations);
    Relations r;
    r.worlds = k;
    r.below.assign(relations, std::vector<Mask>(k, 0));
    for (std::uint64_t code = 0; code < total; ++code) {
      for (std::size_t n = 0; n < relations; ++n) {
        for (std::size_t w = 0; w < k; ++w)
          r.below[n][w] = (code >> (n * pairs + w * k)) & (bit(k) - 1);
      }
      ++out.frames;
      if (!glp_conditions(r)) continue;
      ++out.satisfying;
      for (std::size_t n = 1; n < relations; ++n) {
        if (std::any_of(r.below[n].begin(), r.below[n].end(), [](Mask m) { return m != 0; })) {
          ++out.nontrivial;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace glpwb
