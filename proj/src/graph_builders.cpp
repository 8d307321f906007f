#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"

namespace gog {

GroupHom hom_from_generators(const FiniteGroup& source, const FiniteGroup& target,
                             const std::vector<std::pair<int, int>>& generator_images) {
  GroupHom h;
  h.images.assign(static_cast<std::size_t>(source.order()), -1);
  h.images[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (const auto& [s, image] : generator_images) {
      const int y = source.mul(x, s);
      const int fy = target.mul(h.images[static_cast<std::size_t>(x)], image);
      if (h.images[static_cast<std::size_t>(y)] < 0) {
        h.images[static_cast<std::size_t>(y)] = fy;
        queue.push_back(y);
      } else if (h.images[static_cast<std::size_t>(y)] != fy) {
        throw Error(ErrorKind::BadInput, "generator images do not define a homomorphism");
      }
    }
  }
  if (static_cast<int>(queue.size()) != source.order())
    throw Error(ErrorKind::BadInput, "generator images do not cover the source group");
  if (!is_homomorphism(source, target, h.images))
    throw Error(ErrorKind::BadInput, "generator images do not define a homomorphism");
  return h;
}

GroupHom cyclic_power_map(const FiniteGroup& f, int j) {
  const int a = f.generator_names().at("a");
  return hom_from_generators(f, f, {{a, f.power(a, j)}});
}

GraphOfGroups amalgam(const FiniteGroup& a, const FiniteGroup& b, const FiniteGroup& c, const GroupHom& into_a,
                      const GroupHom& into_b) {
  return GraphOfGroups::make({Vertex{"u", a}, Vertex{"v", b}}, {Edge{"e", 0, 1, c, into_a, into_b}});
}

GraphOfGroups mapping_torus_graph(const FiniteGroup& f, const GroupHom& theta) {
  GroupHom id;
  for (int x = 0; x < f.order(); ++x) id.images.push_back(x);
  return GraphOfGroups::make({Vertex{"v", f}}, {Edge{"e", 0, 0, f, id, theta}});
}

GraphOfGroups theta_graph() {
  const FiniteGroup v4 = klein_four_group();
  const FiniteGroup z2 = cyclic_group(2);
  const int a = v4.generator_names().at("a");
  const int b = v4.generator_names().at("b");
  const int ab = v4.mul(a, b);
  const int gen = z2.generator_names().at("a");
  std::vector<Edge> edges;
  for (const auto& [id, x] : std::vector<std::pair<std::string, int>>{{"a", a}, {"b", b}, {"c", ab}}) {
    const GroupHom h = hom_from_generators(z2, v4, {{gen, x}});
    edges.push_back(Edge{id, 0, 1, z2, h, h});
  }
  return GraphOfGroups::make({Vertex{"v", v4}, Vertex{"w", v4}}, std::move(edges));
}

GraphOfGroups s3_amalgam() {
  const FiniteGroup s3 = dihedral_group(6);
  const FiniteGroup z2 = cyclic_group(2);
  const GroupHom h = hom_from_generators(z2, s3, {{z2.generator_names().at("a"), s3.generator_names().at("s")}});
  return amalgam(s3, s3, z2, h, h);
}

GraphOfGroups z4_amalgam() {
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z2 = cyclic_group(2);
  const GroupHom h = hom_from_generators(z2, z4, {{z2.generator_names().at("a"), z4.power(z4.generator_names().at("a"), 2)}});
  GraphOfGroups g = amalgam(z4, z4, z2, h, h);
  return g;
}

GraphOfGroups cyclic_times_z(int m) { return cyclic_twist(m, 1); }

GraphOfGroups cyclic_twist(int m, int j) {
  const FiniteGroup f = cyclic_group(m);
  return mapping_torus_graph(f, cyclic_power_map(f, j));
}

}  // namespace gog
