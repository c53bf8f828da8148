#include "schurlab/proof_maps.hpp"

#include <algorithm>
#include <set>

#include "schurlab/error.hpp"

namespace schurlab {

std::string_view to_string(MapTag tag) {
  switch (tag) {
    case MapTag::C1: return "C1";
    case MapTag::C2: return "C2";
    case MapTag::C3: return "C3";
    case MapTag::C3_1: return "C3.1";
    case MapTag::C3_2: return "C3.2";
    case MapTag::C3_3: return "C3.3";
  }
  return "unknown";
}

namespace {

// Entries indexed [row-1][col-1] over the whole outer diagram; cells of the
// inner partition hold 0.
using Grid = std::vector<std::vector<int>>;

Grid to_grid(const LRTableau& t) {
  const Partition& outer = t.shape.outer();
  Grid g(static_cast<std::size_t>(outer.length()));
  for (int r = 1; r <= outer.length(); ++r) {
    g[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(outer.part(r)), 0);
    for (int c = t.shape.row_start(r); c <= t.shape.row_end(r); ++c) g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = t.at(r, c);
  }
  return g;
}

LRTableau from_grid(const Grid& g, const SkewShape& shape) {
  LRTableau t{shape, {}};
  t.rows.resize(static_cast<std::size_t>(shape.rows()));
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = shape.row_start(r); c <= shape.row_end(r); ++c)
      t.rows[static_cast<std::size_t>(r - 1)].push_back(g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
  return t;
}

int& cell(Grid& g, int r, int c) { return g.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(c - 1)); }

void require_source(const LRTableau& t, const MapCase& c, const MapSpaces& spaces) {
  if (!(t.shape == SkewShape(c.alpha, spaces.source_inner)) || !is_lr_tableau(t, spaces.source_content))
    throw SchurError(ErrorCode::InvalidInput, "tableau is not in LR(" + c.alpha.to_string() + "/" +
                                                  spaces.source_inner.to_string() + ", " +
                                                  spaces.source_content.to_string() + ")");
}

LRTableau finish_target(const Grid& g, const MapCase& c, const MapSpaces& spaces) {
  const SkewShape shape(c.alpha, spaces.target_inner);
  LRTableau out = from_grid(g, shape);
  if (!is_lr_tableau(out, spaces.target_content))
    throw SchurError(ErrorCode::InternalInvariant, std::string(to_string(c.family)) + " map produced an invalid tableau at alpha=" +
                                                       c.alpha.to_string() + " case " + std::string(to_string(c.tag)));
  return out;
}

// Moves the entries of column 1 below row `top` up one row, starting at
// `top`, and writes `value` into the bottom cell of column 1.
void shift_column_one_up(Grid& g, int top, int bottom, int value) {
  for (int r = top; r < bottom; ++r) cell(g, r, 1) = cell(g, r + 1, 1);
  cell(g, bottom, 1) = value;
}

// Row r loses its first skew cell: entries move one column left, starting
// at column `first`, and `value` fills the last cell.
void shift_row_left(Grid& g, int r, int first, int last, int value) {
  for (int c = first; c < last; ++c) cell(g, r, c) = cell(g, r, c + 1);
  cell(g, r, last) = value;
}

}  // namespace

MapSpaces map_spaces(Family family, int k, int l) {
  switch (family) {
    case Family::Hook: {
      const Partition lambda = family_shape(family, k, l);
      return {lambda, remove_two_corners(lambda, 1, l), remove_corner(lambda, l), remove_corner(lambda, 1)};
    }
    case Family::Kk1: {
      const Partition lambda = family_shape(family, k, l);
      return {lambda, remove_two_corners(lambda, 2, 3), remove_corner(lambda, 3), remove_corner(lambda, 2)};
    }
    case Family::Conj: break;
  }
  throw SchurError(ErrorCode::BadParams, "no tableau map for family " + std::string(to_string(family)));
}

std::optional<MapCase> hook_eligible(const Partition& alpha, int k, int l) {
  check_family_params(Family::Hook, k, l);
  if (alpha.size() != 2 * (k + l - 2))
    throw SchurError(ErrorCode::SizeMismatch, "|alpha| must be " + std::to_string(2 * (k + l - 2)));
  if (!contains(alpha, hook(k, l))) return std::nullopt;
  if (alpha == special_partitions(Family::Hook, k, l).front()) return std::nullopt;
  if (alpha.part(3) > 2 || alpha.part(l + 1) > 1) return std::nullopt;
  MapCase c{Family::Hook, MapTag::C1, k, l, alpha};
  if (alpha.part(l) == 1) return c;
  c.tag = alpha.part(l + 1) == 1 ? MapTag::C2 : MapTag::C3;
  return c;
}

LRTableau hook_map(const LRTableau& t, const MapCase& c) {
  const MapSpaces spaces = map_spaces(Family::Hook, c.k, c.l);
  require_source(t, c, spaces);
  const int l = c.l;
  Grid g = to_grid(t);
  switch (c.tag) {
    case MapTag::C1:
    case MapTag::C2:
      shift_column_one_up(g, l, c.alpha.length(), l);
      break;
    case MapTag::C3:
      // Column two holds 1, ..., l-1 in rows 2..l. The last 1 of row two
      // moves to the head of row l, the 2 below it takes its place, the rest
      // of column two moves up and l fills the bottom.
      cell(g, l, 1) = 1;
      cell(g, 2, c.alpha.part(2)) = 2;
      for (int r = 3; r < l; ++r) cell(g, r, 2) = cell(g, r + 1, 2);
      cell(g, l, 2) = l;
      break;
    default:
      throw SchurError(ErrorCode::InternalInvariant, "hook map has no case " + std::string(to_string(c.tag)));
  }
  return finish_target(g, c, spaces);
}

std::optional<MapCase> kk1_eligible(const Partition& alpha, int k) {
  check_family_params(Family::Kk1, k, 0);
  if (alpha.size() != 4 * k) throw SchurError(ErrorCode::SizeMismatch, "|alpha| must be " + std::to_string(4 * k));
  if (!contains(alpha, Partition({k, k, 1}))) return std::nullopt;
  for (const auto& excluded : special_partitions(Family::Kk1, k, 0))
    if (alpha == excluded) return std::nullopt;
  if (alpha.part(1) > 2 * k || alpha.part(3) > k || alpha.part(5) > 1 || alpha.part(6) > 0) return std::nullopt;
  MapCase c{Family::Kk1, MapTag::C3, k, 0, alpha};
  if (alpha.part(4) == 0) c.tag = MapTag::C1;
  else if (alpha.part(5) == 1) c.tag = MapTag::C2;
  return c;
}

MapTag kk1_subcase(const LRTableau& t, const MapCase& c) {
  if (c.tag != MapTag::C3) return c.tag;
  if (t.at(4, 1) == 1) return MapTag::C3_1;
  int ones_row1 = 0, twos = 0;
  for (int v : t.rows.at(0)) ones_row1 += v == 1;
  for (int r : {2, 3})
    for (int v : t.rows.at(static_cast<std::size_t>(r - 1))) twos += v == 2;
  if (t.at(4, 1) == 2 && twos < ones_row1) return MapTag::C3_2;
  if (t.at(4, 1) == 2 && twos == ones_row1) return MapTag::C3_3;
  throw SchurError(ErrorCode::InternalInvariant, "no sub-case applies at alpha=" + c.alpha.to_string());
}

LRTableau kk1_map(const LRTableau& t, const MapCase& c) {
  const MapSpaces spaces = map_spaces(Family::Kk1, c.k, 0);
  require_source(t, c, spaces);
  const Partition& a = c.alpha;
  Grid g = to_grid(t);
  switch (kk1_subcase(t, c)) {
    case MapTag::C1:
      shift_row_left(g, 3, 1, a.part(3), 3);
      break;
    case MapTag::C2:
      shift_column_one_up(g, 3, 5, 3);
      break;
    case MapTag::C3_1:
      cell(g, 3, 1) = 1;
      shift_row_left(g, 4, 1, a.part(4), 3);
      break;
    case MapTag::C3_2:
      shift_row_left(g, 3, 1, a.part(3), 2);
      shift_row_left(g, 4, 1, a.part(4), 3);
      break;
    case MapTag::C3_3:
      shift_row_left(g, 3, 1, a.part(3), 3);
      break;
    default:
      throw SchurError(ErrorCode::InternalInvariant, "unexpected kk1 case");
  }
  return finish_target(g, c, spaces);
}

MapReport verify_map_properties(Family family, int k, int l) {
  const MapSpaces spaces = map_spaces(family, k, l);
  MapReport report;
  report.family = family;
  report.k = k;
  report.l = family == Family::Hook ? l : 0;
  const int size = spaces.source_inner.size() + spaces.source_content.size();
  const auto excluded = special_partitions(family, k, l);
  for (const auto& alpha : enumerate_partitions(size)) {
    const auto c = family == Family::Hook ? hook_eligible(alpha, k, l) : kk1_eligible(alpha, k);
    if (!c) {
      if (std::find(excluded.begin(), excluded.end(), alpha) != excluded.end()) continue;
      if (contains(alpha, spaces.source_inner) &&
          !enumerate_lr(SkewShape(alpha, spaces.source_inner), spaces.source_content).empty()) {
        report.vanishing_ok = false;
        report.violations.push_back("ineligible alpha=" + alpha.to_string() + " has LR tableaux");
      }
      continue;
    }
    MapRecord rec;
    rec.alpha = alpha;
    rec.tag = c->tag;
    rec.target_count = count_lr(SkewShape(alpha, spaces.target_inner), spaces.target_content);
    // image rows -> sub-cases of its preimages
    std::map<std::vector<std::vector<int>>, std::vector<MapTag>> fibers;
    for (const auto& t : enumerate_lr(SkewShape(alpha, spaces.source_inner), spaces.source_content)) {
      ++rec.source_count;
      try {
        const MapTag sub = family == Family::Hook ? c->tag : kk1_subcase(t, *c);
        ++rec.subcases[sub];
        const LRTableau image = family == Family::Hook ? hook_map(t, *c) : kk1_map(t, *c);
        fibers[image.rows].push_back(sub);
      } catch (const SchurError& e) {
        report.membership_ok = false;
        report.violations.push_back(e.what());
      }
    }
    for (const auto& [image, tags] : fibers) {
      const int fiber = static_cast<int>(tags.size());
      ++report.fiber_histogram[fiber];
      rec.max_fiber = std::max(rec.max_fiber, fiber);
      const bool has33 = std::count(tags.begin(), tags.end(), MapTag::C3_3) > 0;
      if (family == Family::Kk1 && has33 && fiber > 1) {
        report.fiber_ok = false;
        report.violations.push_back("sub-case 3.3 image shared at alpha=" + alpha.to_string());
      }
    }
    const int fiber_limit = family == Family::Hook ? 1 : 2;
    if (rec.max_fiber > fiber_limit) {
      report.fiber_ok = false;
      report.violations.push_back("fiber of size " + std::to_string(rec.max_fiber) + " at alpha=" + alpha.to_string());
    }
    if (rec.source_count > static_cast<std::uint64_t>(fiber_limit) * rec.target_count) {
      report.count_ok = false;
      report.violations.push_back("source count exceeds bound at alpha=" + alpha.to_string());
    }
    report.max_fiber = std::max(report.max_fiber, rec.max_fiber);
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::array<std::uint64_t, 6> special_tuple(Family family, int k, int l, int beta_index) {
  const auto betas = special_partitions(family, k, l);
  if (beta_index < 0 || beta_index >= static_cast<int>(betas.size()))
    throw SchurError(ErrorCode::BadParams, "beta index " + std::to_string(beta_index) + " out of range");
  const Partition& beta = betas[static_cast<std::size_t>(beta_index)];
  const Partition lambda = family_shape(family, k, l);
  const CornerSet js = corners(lambda);
  const int a = js.front(), b = js.back();
  const Partition la = remove_corner(lambda, a), lb = remove_corner(lambda, b);
  auto c = [&](const Partition& x, const std::optional<Partition>& y) -> std::uint64_t {
    return y ? lr_coefficient(beta, x, *y) : 0;
  };
  switch (family) {
    case Family::Hook:
      return {c(la, lb), c(lb, lb), c(la, la), c(lambda, remove_two_corners(lambda, a, b)), c(lambda, remove_up(lambda, b)),
              c(lambda, remove_left(lambda, a))};
    case Family::Kk1:
      return {c(la, lb), c(la, la), c(lb, lb), c(lambda, remove_two_corners(lambda, a, b)), c(lambda, remove_up(lambda, a)),
              c(lambda, remove_left(lambda, a))};
    case Family::Conj:
      return {c(la, lb), c(lb, lb), c(la, la), c(lambda, remove_two_corners(lambda, a, b)), c(lambda, remove_up(lambda, b)),
              c(lambda, remove_left(lambda, b))};
  }
  throw SchurError(ErrorCode::InternalInvariant, "unhandled family");
}

}  // namespace schurlab
