#include "ballq/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace ballq::group {

ExactMatrix reflection_matrix(const std::vector<Cyclotomic>& root) {
  const size_t n = root.size();
  const Cyclotomic norm = exact::hermitian_inner(root, root);
  if (norm.is_zero()) throw GroupError("reflection root has zero norm");
  const Cyclotomic scale = Cyclotomic(Rational(2)) / norm;
  ExactMatrix m = ExactMatrix::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m.at(i, j) -= scale * root[i] * root[j].conj();
  return m;
}

std::vector<Cyclotomic> canonical_normal(std::vector<Cyclotomic> v) {
  for (const Cyclotomic& c : v) {
    if (c.is_zero()) continue;
    const Cyclotomic inv = c.inverse();
    for (Cyclotomic& e : v) e *= inv;
    return v;
  }
  throw GroupError("cannot canonicalize the zero vector");
}

std::string vector_key(const std::vector<Cyclotomic>& v, unsigned conductor) {
  unsigned shared = conductor;
  if (shared == 0) {
    shared = 1;
    for (const Cyclotomic& c : v) shared = std::lcm(shared, c.conductor());
  }
  std::string key = std::to_string(v.size()) + ":";
  for (const Cyclotomic& c : v) c.embedded(shared).append_key(key);
  return key;
}

long matrix_order(const ExactMatrix& m, long bound) {
  ExactMatrix power = m;
  long order = 1;
  while (!power.is_identity()) {
    power = power * m;
    if (++order > bound) throw GroupError("matrix order exceeds bound");
  }
  return order;
}

namespace {

/// First nonzero column of (r - I), canonicalized: for a reflection this
/// spans the root line.
std::vector<Cyclotomic> normal_from_difference(const ExactMatrix& diff) {
  for (size_t c = 0; c < diff.cols(); ++c) {
    std::vector<Cyclotomic> column;
    bool nonzero = false;
    for (size_t r = 0; r < diff.rows(); ++r) {
      column.push_back(diff.at(r, c));
      nonzero = nonzero || !diff.at(r, c).is_zero();
    }
    if (nonzero) return canonical_normal(std::move(column));
  }
  throw GroupError("identity matrix passed where a reflection was expected");
}

/// Alternating product xyxy... with `factors` factors.
ExactMatrix alternating(const ExactMatrix& x, const ExactMatrix& y, int factors) {
  ExactMatrix out = ExactMatrix::identity(x.rows());
  for (int i = 0; i < factors; ++i) out = out * (i % 2 == 0 ? x : y);
  return out;
}

}  // namespace

std::vector<Cyclotomic> reflection_normal(const ExactMatrix& r) {
  const ExactMatrix diff = r - ExactMatrix::identity(r.rows());
  if (exact::rank(diff) != 1)
    throw GroupError("reflection_normal expects a matrix fixing a hyperplane");
  return normal_from_difference(diff);
}

bool BuiltGroup::contains(const ExactMatrix& m) const {
  return element_index_.count(m.key(conductor())) != 0;
}

int BuiltGroup::mirror_index(const std::string& normal_key) const {
  auto it = mirror_index_.find(normal_key);
  return it == mirror_index_.end() ? -1 : static_cast<int>(it->second);
}

ExactMatrix BuiltGroup::word_matrix(const refdata::Word& word) const {
  ExactMatrix m = ExactMatrix::identity(static_cast<size_t>(data_.rank));
  for (int letter : word) {
    const size_t i = static_cast<size_t>(letter < 0 ? -letter : letter) - 1;
    if (i >= generators_.size()) throw GroupError("word letter out of range");
    m = m * (letter > 0 ? generators_[i] : generators_[i].conjugate_transpose());
  }
  return m;
}

BuiltGroup build_group(const refdata::GroupData& data, size_t budget) {
  BuiltGroup g;
  g.data_ = data;
  const size_t n = static_cast<size_t>(data.rank);
  for (const auto& root : data.roots) g.generators_.push_back(reflection_matrix(root));

  // Keys are computed at the group's ambient conductor: entries of products
  // arrive at whatever conductor the arithmetic produced, and only embedding
  // into a fixed common field makes equal matrices key equal.
  const unsigned N = static_cast<unsigned>(data.conductor);
  auto add = [&g, &data, budget, N](ExactMatrix m) {
    std::string key = m.key(N);
    if (g.element_index_.count(key)) return;
    if (g.elements_.size() >= budget)
      throw GroupError(data.id + ": closure exceeded the budget of " +
                       std::to_string(budget) + " elements");
    g.element_index_.emplace(std::move(key), g.elements_.size());
    g.elements_.push_back(std::move(m));
  };

  add(ExactMatrix::identity(n));
  for (size_t next = 0; next < g.elements_.size(); ++next) {
    const ExactMatrix current = g.elements_[next];  // copy: the vector grows
    for (const ExactMatrix& gen : g.generators_) add(current * gen);
  }

  for (const ExactMatrix& e : g.elements_)
    if (e.is_scalar()) ++g.center_order_;

  // Reflections: trace 2 (the multiplier is -1 throughout these groups) and
  // rank(g - I) = 1.  Each mirror carries exactly one reflection.
  const ExactMatrix identity = ExactMatrix::identity(n);
  const Cyclotomic two = Cyclotomic(Rational(2));
  for (size_t i = 0; i < g.elements_.size(); ++i) {
    if (g.elements_[i].trace() != two) continue;
    const ExactMatrix diff = g.elements_[i] - identity;
    if (exact::rank(diff) != 1) continue;
    g.reflections_.push_back(i);
    Mirror m;
    m.normal = normal_from_difference(diff);
    m.key = vector_key(m.normal, N);
    m.reflection = i;
    if (g.mirror_index_.count(m.key))
      throw GroupError(data.id + ": two reflections share the mirror " + m.key);
    g.mirror_index_.emplace(m.key, g.mirrors_.size());
    g.mirrors_.push_back(std::move(m));
  }

  // Mirror orbits under the generator action on normals.
  std::vector<int> orbit_of(g.mirrors_.size(), -1);
  std::vector<std::vector<size_t>> orbits;
  for (size_t start = 0; start < g.mirrors_.size(); ++start) {
    if (orbit_of[start] != -1) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<size_t> members = {start};
    orbit_of[start] = id;
    for (size_t head = 0; head < members.size(); ++head) {
      const std::vector<Cyclotomic> normal = g.mirrors_[members[head]].normal;
      for (const ExactMatrix& gen : g.generators_) {
        const std::string key = vector_key(canonical_normal(gen.apply(normal)), N);
        auto it = g.mirror_index_.find(key);
        if (it == g.mirror_index_.end())
          throw GroupError(data.id + ": generator action leaves the mirror set");
        if (orbit_of[it->second] == -1) {
          orbit_of[it->second] = id;
          members.push_back(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }

  // Label the orbits through the curated anchor generators and order them as
  // the curated tables do.
  if (orbits.size() != data.mirror_orbits.size())
    throw GroupError(data.id + ": found " + std::to_string(orbits.size()) +
                     " mirror orbits where the tables list " +
                     std::to_string(data.mirror_orbits.size()));
  std::vector<int> final_index(orbits.size(), -1);
  for (const refdata::MirrorOrbit& curated : data.mirror_orbits) {
    const auto& root = data.roots[static_cast<size_t>(curated.anchor) - 1];
    auto it = g.mirror_index_.find(vector_key(canonical_normal(root), N));
    if (it == g.mirror_index_.end())
      throw GroupError(data.id + ": anchor root of " + curated.label +
                       " is not a mirror of the built group");
    const int orbit = orbit_of[it->second];
    if (final_index[static_cast<size_t>(orbit)] != -1)
      throw GroupError(data.id + ": two anchors land in one mirror orbit");
    final_index[static_cast<size_t>(orbit)] =
        static_cast<int>(g.mirror_orbits_.size());
    MirrorOrbitInfo info;
    info.label = curated.label;
    info.weight_index = curated.weight_index;
    info.mirrors = orbits[static_cast<size_t>(orbit)];
    g.mirror_orbits_.push_back(std::move(info));
  }
  for (size_t i = 0; i < g.mirrors_.size(); ++i)
    g.mirrors_[i].orbit = final_index[static_cast<size_t>(orbit_of[i])];

  return g;
}

BuiltGroup build_group(const std::string& id, size_t budget) {
  return build_group(refdata::group(id), budget);
}

std::vector<std::string> validate_group(const BuiltGroup& g) {
  std::vector<std::string> problems;
  const refdata::GroupData& data = g.data();
  auto problem = [&](const std::string& msg) { problems.push_back(data.id + ": " + msg); };

  const size_t n = static_cast<size_t>(data.rank);
  const ExactMatrix identity = ExactMatrix::identity(n);

  for (size_t i = 0; i < g.generators().size(); ++i) {
    const ExactMatrix& gen = g.generators()[i];
    if (gen.conjugate_transpose() * gen != identity)
      problem("generator r" + std::to_string(i + 1) + " is not unitary");
    if (!(gen * gen).is_identity())
      problem("generator r" + std::to_string(i + 1) + " is not an involution");
  }

  if (g.order() != data.order)
    problem("order " + std::to_string(g.order()) + " != " + std::to_string(data.order));
  if (g.center_order() != data.center_order)
    problem("center order " + std::to_string(g.center_order()) +
            " != " + std::to_string(data.center_order));
  if (static_cast<long>(g.mirrors().size()) != data.mirror_count)
    problem("mirror count " + std::to_string(g.mirrors().size()) +
            " != " + std::to_string(data.mirror_count));

  for (size_t i : g.reflections()) {
    const ExactMatrix& r = g.elements()[i];
    if (!(r * r).is_identity()) problem("a reflection is not an involution");
    if (exact::rank(r - identity) != 1) problem("a reflection does not fix a hyperplane");
  }

  auto gen_at = [&](int index) -> const ExactMatrix& {
    return g.generators()[static_cast<size_t>(index) - 1];
  };

  for (const refdata::BraidRelation& b : data.braids) {
    const ExactMatrix &x = gen_at(b.a), &y = gen_at(b.b);
    if (alternating(x, y, b.length) != alternating(y, x, b.length))
      problem("braid relation br_" + std::to_string(b.length) + "(r" +
              std::to_string(b.a) + ", r" + std::to_string(b.b) + ") fails");
    if (matrix_order(x * y) != b.length)
      problem("ord(r" + std::to_string(b.a) + " r" + std::to_string(b.b) +
              ") != " + std::to_string(b.length));
  }
  for (const auto& [a, b] : data.commuting)
    if (gen_at(a) * gen_at(b) != gen_at(b) * gen_at(a))
      problem("generators r" + std::to_string(a) + " and r" + std::to_string(b) +
              " do not commute");
  for (const std::vector<int>& cycle : data.cycles) {
    auto product_from = [&](size_t offset) {
      ExactMatrix m = ExactMatrix::identity(n);
      for (size_t i = 0; i < cycle.size(); ++i)
        m = m * gen_at(cycle[(offset + i) % cycle.size()]);
      return m;
    };
    const ExactMatrix base = product_from(0);
    for (size_t offset = 1; offset < cycle.size(); ++offset)
      if (product_from(offset) != base) {
        problem("cycle relation fails at rotation " + std::to_string(offset));
        break;
      }
  }
  for (const refdata::WordBraid& wb : data.word_braids) {
    const ExactMatrix a = g.word_matrix(wb.a), b = g.word_matrix(wb.b);
    if (alternating(a, b, wb.length) != alternating(b, a, wb.length))
      problem("word braid relation br_" + std::to_string(wb.length) + "(" +
              refdata::word_str(wb.a) + "; " + refdata::word_str(wb.b) + ") fails");
  }

  for (const auto& [word, order] : data.word_orders) {
    const long got = matrix_order(g.word_matrix(word));
    if (got != order)
      problem("ord(" + refdata::word_str(word) + ") = " + std::to_string(got) +
              " != " + std::to_string(order));
  }

  if (g.mirror_orbits().size() != data.mirror_orbits.size()) {
    problem("mirror orbit count mismatch");
  } else {
    for (size_t i = 0; i < g.mirror_orbits().size(); ++i) {
      const MirrorOrbitInfo& got = g.mirror_orbits()[i];
      const refdata::MirrorOrbit& want = data.mirror_orbits[i];
      if (got.label != want.label ||
          static_cast<long>(got.mirrors.size()) != want.size ||
          got.weight_index != want.weight_index)
        problem("mirror orbit " + want.label + " does not match the tables");
    }
  }

  return problems;
}

}  // namespace ballq::group
