#include "gog/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <set>

namespace gog {

namespace {

using Images = std::vector<int>;

// Interns group tables and caches the per-edge normal forms.
class Canonicalizer {
 public:
  int intern(const FiniteGroup& g) {
    for (std::size_t i = 0; i < groups_.size(); ++i)
      if (groups_[i] == g) return static_cast<int>(i);
    groups_.push_back(g);
    auts_.push_back(automorphisms(g));
    return static_cast<int>(groups_.size() - 1);
  }

  // Least (into_o, into_t) pair up to Aut(G_e) on the source and inner
  // automorphisms on either target.
  const std::pair<Images, Images>& pair_form(int ge, int go, int gt, const Images& io, const Images& it) {
    auto key = std::make_tuple(ge, go, gt, io, it);
    auto found = pairs_.find(key);
    if (found != pairs_.end()) return found->second;
    const FiniteGroup& fo = groups_[static_cast<std::size_t>(go)];
    const FiniteGroup& ft = groups_[static_cast<std::size_t>(gt)];
    std::pair<Images, Images> best;
    bool first = true;
    Images a(io.size()), b(it.size());
    for (const GroupHom& s : auts_[static_cast<std::size_t>(ge)])
      for (int c = 0; c < fo.order(); ++c)
        for (int d = 0; d < ft.order(); ++d) {
          for (std::size_t x = 0; x < io.size(); ++x) {
            a[x] = fo.conj(c, io[static_cast<std::size_t>(s(static_cast<int>(x)))]);
            b[x] = ft.conj(d, it[static_cast<std::size_t>(s(static_cast<int>(x)))]);
          }
          if (first || std::tie(a, b) < std::tie(best.first, best.second)) {
            best = {a, b};
            first = false;
          }
        }
    return pairs_.emplace(std::move(key), std::move(best)).first->second;
  }

  // `label` is the edge group's position in the key header, `ge` its interned id.
  std::vector<int> edge_code(int o, int t, int label, int ge, int go, int gt, const Images& io, const Images& it) {
    const auto& fwd = pair_form(ge, go, gt, io, it);
    const auto& rev = pair_form(ge, gt, go, it, io);
    auto code = [&](int x, int y, const std::pair<Images, Images>& p) {
      std::vector<int> out{x, y, label};
      out.insert(out.end(), p.first.begin(), p.first.end());
      out.insert(out.end(), p.second.begin(), p.second.end());
      return out;
    };
    return std::min(code(o, t, fwd), code(t, o, rev));
  }

  std::vector<int> key(const GraphOfGroups& g) {
    const int nv = g.vertex_count();
    std::vector<int> vg(static_cast<std::size_t>(nv)), eg;
    for (int v = 0; v < nv; ++v) vg[v] = intern(g.group(v));
    for (const Edge& e : g.edges()) eg.push_back(intern(e.group));

    // Group ids depend on interning order, so the header lists the tables.
    std::vector<int> used(vg);
    used.insert(used.end(), eg.begin(), eg.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::sort(used.begin(), used.end(), [&](int x, int y) {
      const auto& gx = groups_[static_cast<std::size_t>(x)];
      const auto& gy = groups_[static_cast<std::size_t>(y)];
      return std::make_pair(gx.order(), gx.table()) < std::make_pair(gy.order(), gy.table());
    });
    std::map<int, int> local;
    std::vector<int> header{static_cast<int>(used.size())};
    for (int id : used) {
      local[id] = static_cast<int>(local.size());
      const auto& t = groups_[static_cast<std::size_t>(id)].table();
      header.push_back(static_cast<int>(t.size()));
      for (const auto& row : t) header.insert(header.end(), row.begin(), row.end());
    }

    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      // perm[new] = old; only orders with non-decreasing group ids can be minimal.
      bool sorted = true;
      for (int i = 1; i < nv && sorted; ++i) sorted = local[vg[perm[i - 1]]] <= local[vg[perm[i]]];
      if (!sorted) continue;
      std::vector<int> where(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i) where[perm[i]] = i;
      std::vector<std::size_t> choice(static_cast<std::size_t>(nv), 0);
      while (true) {
        std::vector<std::vector<int>> codes;
        for (int e = 0; e < g.edge_count(); ++e) {
          const Edge& ed = g.edge(e);
          const GroupHom& ao = auts_[vg[ed.o]][choice[ed.o]];
          const GroupHom& at = auts_[vg[ed.t]][choice[ed.t]];
          codes.push_back(edge_code(where[ed.o], where[ed.t], local[eg[e]], eg[e], vg[ed.o], vg[ed.t], compose(ao, ed.into_o).images,
                                    compose(at, ed.into_t).images));
        }
        std::sort(codes.begin(), codes.end());
        std::vector<int> k = header;
        k.push_back(nv);
        for (int i = 0; i < nv; ++i) k.push_back(local[vg[perm[i]]]);
        k.push_back(g.edge_count());
        for (const auto& c : codes) k.insert(k.end(), c.begin(), c.end());
        if (best.empty() || k < best) best = std::move(k);
        int v = 0;
        for (; v < nv; ++v) {
          if (++choice[v] < auts_[vg[v]].size()) break;
          choice[v] = 0;
        }
        if (v == nv) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  std::vector<FiniteGroup> groups_;
  std::vector<std::vector<GroupHom>> auts_;
  std::map<std::tuple<int, int, int, Images, Images>, std::pair<Images, Images>> pairs_;
};

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = nv;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

// Non-decreasing sequences of length k over [0, n).
void multisets(int n, int k, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == k) return f(cur);
  for (int i = cur.empty() ? 0 : cur.back(); i < n; ++i) {
    cur.push_back(i);
    multisets(n, k, cur, f);
    cur.pop_back();
  }
}

struct EdgeOption {
  int ge;
  Images io, it;
};

long read_cursor(const std::string& path) {
  std::ifstream in(path);
  long cursor = -1;
  if (in) in >> cursor;
  return in ? cursor : -1;
}

void write_cursor(const std::string& path, long index) {
  std::ofstream out(path, std::ios::trunc);
  out << index << '\n';
}

}  // namespace

std::vector<int> canonical_key(const GraphOfGroups& g) {
  if (!g.all_finite()) throw Error(ErrorKind::UnsupportedOpaqueVertex, "canonical forms need finite vertex groups");
  Canonicalizer c;
  return c.key(g);
}

std::vector<GraphOfGroups> enumerate_candidates(const Catalog& c) {
  if (c.max_vertices < 1 || c.max_edges < 1) throw Error(ErrorKind::BadInput, "bounds must be at least 1");
  if (c.groups.empty() || c.edge_groups.empty()) throw Error(ErrorKind::BadInput, "empty catalog");
  Canonicalizer canon;
  std::vector<int> vid, eid;
  for (const auto& g : c.groups) vid.push_back(canon.intern(g));
  for (const auto& g : c.edge_groups) eid.push_back(canon.intern(g));

  // Edge options per (origin group, target group), up to the per-edge symmetries.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeOption>> options;
  auto edge_options = [&](std::size_t go, std::size_t gt) -> const std::vector<EdgeOption>& {
    auto it = options.find({go, gt});
    if (it != options.end()) return it->second;
    std::vector<EdgeOption> out;
    std::set<std::tuple<int, Images, Images>> seen;
    for (std::size_t e = 0; e < c.edge_groups.size(); ++e) {
      const auto into_o = injective_homs(c.edge_groups[e], c.groups[go]);
      const auto into_t = injective_homs(c.edge_groups[e], c.groups[gt]);
      for (const auto& a : into_o)
        for (const auto& b : into_t) {
          const auto& p = canon.pair_form(eid[e], vid[go], vid[gt], a.images, b.images);
          if (seen.emplace(static_cast<int>(e), p.first, p.second).second)
            out.push_back({static_cast<int>(e), p.first, p.second});
        }
    }
    return options.emplace(std::make_pair(go, gt), std::move(out)).first->second;
  };

  std::vector<GraphOfGroups> out;
  std::set<std::vector<int>> keys;
  for (int nv = 1; nv <= c.max_vertices; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) slots.emplace_back(i, j);
    for (int ne = 1; ne <= c.max_edges; ++ne) {
      std::vector<int> cur;
      multisets(static_cast<int>(slots.size()), ne, cur, [&](const std::vector<int>& pick) {
        std::vector<std::pair<int, int>> shape;
        for (int s : pick) shape.push_back(slots[s]);
        if (!connected(nv, shape)) return;
        std::vector<std::size_t> assign(static_cast<std::size_t>(nv), 0);
        while (true) {
          std::vector<const std::vector<EdgeOption>*> per_edge;
          bool empty = false;
          for (auto [o, t] : shape) {
            per_edge.push_back(&edge_options(assign[o], assign[t]));
            empty = empty || per_edge.back()->empty();
          }
          std::vector<std::size_t> at(shape.size(), 0);
          while (!empty) {
            std::vector<Vertex> vs;
            for (int v = 0; v < nv; ++v) vs.push_back(Vertex{"v" + std::to_string(v), c.groups[assign[v]]});
            std::vector<Edge> es;
            for (std::size_t e = 0; e < shape.size(); ++e) {
              const EdgeOption& op = (*per_edge[e])[at[e]];
              es.push_back(Edge{"e" + std::to_string(e), shape[e].first, shape[e].second,
                                c.edge_groups[static_cast<std::size_t>(op.ge)], GroupHom{op.io}, GroupHom{op.it}});
            }
            try {
              GraphOfGroups g = GraphOfGroups::make(std::move(vs), std::move(es));
              if (keys.insert(canon.key(g)).second) out.push_back(std::move(g));
            } catch (const Error&) {
            }
            // Parallel edges in the same slot are unordered: keep their options non-decreasing.
            std::size_t e = 0;
            for (; e < at.size(); ++e) {
              if (++at[e] < per_edge[e]->size()) break;
              at[e] = 0;
            }
            if (e == at.size()) break;
            for (std::size_t f = e; f-- > 0;)
              if (pick[f] == pick[f + 1]) at[f] = std::max(at[f], at[f + 1]);
          }
          int v = 0;
          for (; v < nv; ++v) {
            if (++assign[v] < c.groups.size()) break;
            assign[v] = 0;
          }
          if (v == nv) break;
        }
      });
    }
  }
  std::erase_if(out, [](const GraphOfGroups& g) {
    for (const auto& f : validate(g))
      if (!f.holds) return true;
    return false;
  });
  return out;
}

namespace {

std::optional<CheckReport> screen(const GraphOfGroups& g, const Catalog& c, const EnumerationOptions& opts) {
  const OrientationCharacter omega = g.trivial_omega();
  if (!opts.run_battery) {
    CheckReport r;
    r.n = c.n;
    for (const auto& id : check_ids()) r.checks.push_back({id, check_names().at(id), CheckStatus::Skipped, "battery off"});
    r.overall = Verdict::Candidate;
    return r;
  }
  // Cheap checks first; the tree-based ones only run on what survives them.
  static const std::vector<std::string> cheap{"a", "g", "h", "i", "j", "k", "l"};
  std::vector<std::string> first;
  for (const auto& id : cheap)
    if (opts.filters.empty() || std::find(opts.filters.begin(), opts.filters.end(), id) != opts.filters.end())
      first.push_back(id);
  if (!first.empty() && run_checks(g, omega, c.n, opts.max_radius, first).overall == Verdict::Obstructed)
    return std::nullopt;
  CheckReport full = run_checks(g, omega, c.n, opts.max_radius, opts.filters);
  if (full.overall == Verdict::Obstructed) return std::nullopt;
  return full;
}

}  // namespace

long enumerate_graphs(const Catalog& c, const EnumerationOptions& opts,
                      const std::function<void(const EnumeratedGraph&)>& emit) {
  if (c.n < 4 || c.n % 2 != 0) throw Error(ErrorKind::InvalidDimension, "n must be even and at least 4");
  for (const auto& f : opts.filters)
    if (!check_names().contains(f)) throw Error(ErrorKind::BadInput, "unknown check id " + f);
  const std::vector<GraphOfGroups> candidates = enumerate_candidates(c);
  long start = 0;
  if (opts.resume && !opts.progress_path.empty()) start = read_cursor(opts.progress_path) + 1;
  const long total = static_cast<long>(candidates.size());
  const int threads = std::max(1, opts.threads);
  const long batch = threads == 1 ? 1 : 8L * threads;
  long emitted = 0;
  for (long lo = start; lo < total; lo += batch) {
    const long hi = std::min(total, lo + batch);
    std::vector<std::optional<CheckReport>> reports(static_cast<std::size_t>(hi - lo));
    if (threads == 1) {
      for (long i = lo; i < hi; ++i) reports[i - lo] = screen(candidates[i], c, opts);
    } else {
      std::vector<std::future<void>> jobs;
      for (int t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
          for (long i = lo + t; i < hi; i += threads) reports[i - lo] = screen(candidates[i], c, opts);
        }));
      for (auto& j : jobs) j.get();
    }
    for (long i = lo; i < hi; ++i) {
      if (!reports[i - lo]) continue;
      emit(EnumeratedGraph{i, candidates[i], std::move(*reports[i - lo])});
      ++emitted;
      if (!opts.progress_path.empty()) write_cursor(opts.progress_path, i);
    }
  }
  return emitted;
}

std::vector<EnumeratedGraph> enumerate_graphs(const Catalog& c, const EnumerationOptions& opts) {
  std::vector<EnumeratedGraph> out;
  enumerate_graphs(c, opts, [&](const EnumeratedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace gog
