// Exact-rational geometry: genericity, separating counts, lifts, lines.

#include <array>
#include <optional>
#include <vector>

#include "orchard/geometry.hpp"
#include "orchard/io.hpp"
#include "orchard/morphism.hpp"
#include "test_support.hpp"

using namespace orchard;

namespace {

MatrixR square_points() {
  MatrixR m(2, 4);
  m << 0, 1, 1, 0,
       0, 0, 1, 1;
  return m;
}

void rational_scalar() {
  CHECK(Rational::parse("+2/4").str() == "1/2");
  CHECK(Rational::parse("-6/-4").str() == "3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-0/9").str() == "0");
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1) / Rational(4) == Rational(1, 4));
  CHECK(-Rational(2, 5) < Rational(0));
  CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational().is_zero());

  CHECK_THROWS_AS((void)Rational(1, 0), InputError);
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), InputError);
  CHECK_THROWS_AS((void)Rational::parse("1.5"), InputError);
  CHECK_THROWS_AS((void)Rational::parse(""), InputError);
  CHECK_THROWS_AS((void)Rational::parse("a/b"), InputError);
  CHECK_THROWS_AS((void)Rational::parse("1/0"), InputError);
}

void exact_linear_algebra() {
  MatrixR id2(2, 2);
  id2 << 1, 0, 0, 1;
  CHECK(determinant_sign(id2) == +1);
  MatrixR swapped(2, 2);
  swapped << 0, 1, 1, 0;
  CHECK(determinant_sign(swapped) == -1);
  MatrixR singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(determinant_sign(singular) == 0);
  CHECK(exact_rank(singular) == 1);
  MatrixR one(1, 1);
  one << Rational(-5);
  CHECK(determinant_sign(one) == -1);

  // Simplex orientation in the plane.
  MatrixR tri(2, 3);
  tri << 0, 1, 0,
         0, 0, 1;
  CHECK(simplex_orientation(tri) == +1);
  MatrixR tri_cw(2, 3);
  tri_cw << 0, 0, 1,
            0, 1, 0;
  CHECK(simplex_orientation(tri_cw) == -1);
  MatrixR collinear(2, 3);
  collinear << 0, 1, 2,
               0, 1, 2;
  CHECK(simplex_orientation(collinear) == 0);
  CHECK_THROWS_AS((void)simplex_orientation(square_points()), InputError);
}

void genericity() {
  CHECK(!genericity_witness(square_points()).has_value());

  MatrixR bad(2, 4);
  bad << 0, 1, 2, 5,
         0, 1, 2, 0;
  const auto w = genericity_witness(bad);
  CHECK(w.has_value());
  CHECK(*w == (std::vector<int>{0, 1, 2}));

  // Small configurations use the rank path and blame the whole set.
  MatrixR dup(2, 2);
  dup << 3, 3,
         1, 1;
  const auto wd = genericity_witness(dup);
  CHECK(wd.has_value());
  CHECK(*wd == (std::vector<int>{0, 1}));
  MatrixR two(2, 2);
  two << 3, 3,
         1, 2;
  CHECK(!genericity_witness(two).has_value());

  // Configuration::make enforces the same predicate.
  bool threw = false;
  try {
    (void)Configuration::make(bad);
  } catch (const GenericityError& e) {
    threw = true;
    CHECK(e.witness() == (std::vector<int>{0, 1, 2}));
  }
  CHECK(threw);
  CHECK_THROWS_AS(
      (void)Configuration::make(square_points(), GroundSet::indexed(3)),
      InputError);

  const Configuration c = Configuration::make(square_points());
  CHECK(c.dim() == 2);
  CHECK(c.size() == 4);
  CHECK(c.labels().label(2) == "P2");
}

void square_fixture() {
  const Configuration c = Configuration::make(square_points());

  // Counterclockwise square: every orientation triple is positive.
  const SignFunction phi = orientation_function(c);
  CHECK(phi.arity() == 3);
  CHECK(phi.signature() == -1);
  CHECK(phi.table() == (std::vector<Sign>{+1, +1, +1, +1}));

  // Separating line counts, pair by pair: only the diagonals cross.
  CHECK(separating_count(c, 0, 1) == 0);
  CHECK(separating_count(c, 0, 2) == 1);
  CHECK(separating_count(c, 0, 3) == 0);
  CHECK(separating_count(c, 1, 2) == 0);
  CHECK(separating_count(c, 1, 3) == 1);
  CHECK(separating_count(c, 2, 3) == 0);

  const PairwiseSign s = separation_signs(c);
  CHECK(s.gamma() == -1);
  CHECK(s.gamma() == parity_sign(4 - 3, 2 - 1));
  CHECK(s.table() == (std::vector<Sign>{+1, -1, +1, +1, -1, +1}));

  const TwoPartition p = geometric_partition(c);
  CHECK(p == TwoPartition(c.labels(), {+1, -1, +1, -1}));
  // Agreement with the morphism route on the orientation function.
  CHECK(p == orchard_rho(phi));
}

void triangle_fixture() {
  // Three vertices and an interior point: the vertices stick together.
  MatrixR m(2, 4);
  m << 0, 4, 0, 1,
       0, 0, 4, 1;
  const Configuration c = Configuration::make(m);
  CHECK(separating_count(c, 0, 3) == 0);
  CHECK(separating_count(c, 0, 1) == 1);
  const TwoPartition p = geometric_partition(c);
  CHECK(p == TwoPartition(c.labels(), {+1, +1, +1, -1}));
  CHECK(!p.is_trivial());

  // With at most d+1 points there is nothing to separate.
  MatrixR tiny(2, 3);
  tiny << 0, 4, 0,
          0, 0, 4;
  CHECK(geometric_partition(Configuration::make(tiny)).is_trivial());
}

void flip_fixtures() {
  const Configuration a = Configuration::make(square_points());

  // Dragging P2 from (1,1) to (2/5, 2/5) crosses exactly the line P1P3.
  MatrixR moved = square_points();
  moved(0, 2) = Rational(2, 5);
  moved(1, 2) = Rational(2, 5);
  const Configuration b = Configuration::make(moved);

  const GeometricFlip f = flip_relation(a, b);
  CHECK(f.differing_tuples == 1);
  CHECK(f.is_flip);
  CHECK(f.flipset == (std::vector<int>{1, 2, 3}));
  CHECK(f.changed_pairs ==
        (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}}));
  CHECK(f.pattern_ok);
  CHECK(geometric_partition(b) ==
        TwoPartition(b.labels(), {+1, +1, -1, +1}));

  // A configuration against itself differs nowhere.
  const GeometricFlip same = flip_relation(a, a);
  CHECK(same.differing_tuples == 0);
  CHECK(!same.is_flip);
  CHECK(same.changed_pairs.empty());

  // Mirroring negates every orientation tuple: maximally far from a flip,
  // yet the induced partition is untouched (each pair sign multiplies an
  // even number of orientation values).
  MatrixR mirrored = square_points();
  mirrored.row(0) = -mirrored.row(0);
  const Configuration mc = Configuration::make(mirrored);
  const GeometricFlip mir = flip_relation(a, mc);
  CHECK(mir.differing_tuples == 4);  // all C(4,3) tuples
  CHECK(!mir.is_flip);
  CHECK(mir.changed_pairs.empty());
  CHECK(geometric_partition(mc) == geometric_partition(a));

  // Mismatched shapes are rejected.
  MatrixR tiny(2, 3);
  tiny << 0, 4, 0,
          0, 0, 4;
  CHECK_THROWS_AS(
      (void)flip_relation(a, Configuration::make(tiny)), InputError);
}

void function_bases() {
  const FunctionBasis aff = FunctionBasis::affine(3);
  CHECK(aff.ambient_dim() == 3);
  CHECK(aff.lifted_dim() == 3);
  VectorR v3(3);
  v3 << 1, 2, 3;
  CHECK(aff.lift(v3) == v3);

  const FunctionBasis circ = FunctionBasis::circle();
  CHECK(circ.lifted_dim() == 3);
  VectorR xy(2);
  xy << 3, 4;
  VectorR lifted = circ.lift(xy);
  CHECK(lifted.size() == 3);
  CHECK(lifted(0) == Rational(3));
  CHECK(lifted(1) == Rational(4));
  CHECK(lifted(2) == Rational(25));

  const FunctionBasis con = FunctionBasis::conic();
  CHECK(con.lifted_dim() == 5);
  VectorR uv(2);
  uv << 2, 3;
  VectorR cl = con.lift(uv);
  CHECK(cl(0) == Rational(2));
  CHECK(cl(1) == Rational(3));
  CHECK(cl(2) == Rational(4));
  CHECK(cl(3) == Rational(6));
  CHECK(cl(4) == Rational(9));

  const FunctionBasis interp = FunctionBasis::interpolation(2);
  CHECK(interp.lifted_dim() == 3);
  VectorR p(2);
  p << 2, 5;
  VectorR il = interp.lift(p);
  CHECK(il(0) == Rational(2));
  CHECK(il(1) == Rational(4));
  CHECK(il(2) == Rational(5));

  const FunctionBasis flat = FunctionBasis::interpolation(0);
  CHECK(flat.lifted_dim() == 1);
  CHECK(flat.lift(p)(0) == Rational(5));

  CHECK_THROWS_AS((void)FunctionBasis::interpolation(-1), InputError);
  CHECK_THROWS_AS((void)FunctionBasis::affine(0), InputError);

  // Interpolation with positive degree needs pairwise distinct abscissas.
  MatrixR shared_x(2, 3);
  shared_x << 1, 1, 2,
              0, 5, 3;
  CHECK_THROWS_AS(FunctionBasis::interpolation(1).validate_points(shared_x),
                  InputError);
  CHECK_THROWS_AS((void)cgeneric_lift(shared_x, FunctionBasis::interpolation(2)),
                  InputError);
  // Degree 0 tolerates shared abscissas (vertical alignment is harmless).
  const Configuration c0 = cgeneric_lift(shared_x, FunctionBasis::interpolation(0));
  CHECK(c0.dim() == 1);
}

void degree_zero_interpolation() {
  // Degree 0 separates by horizontal lines: the middle height is cut off
  // from the outer two.
  MatrixR m(2, 3);
  m << 0, 5, 3,
       0, 1, 2;
  const FunctionBasis flat = FunctionBasis::interpolation(0);
  const Configuration c = cgeneric_lift(m, flat);
  CHECK(geometric_partition(c) ==
        TwoPartition(c.labels(), {+1, -1, +1}));
  CHECK(cgeneric_separating(m, flat, std::array<int, 1>{1}, 0, 2) == -1);
  CHECK(cgeneric_separating(m, flat, std::array<int, 1>{2}, 0, 1) == +1);
}

void curved_separation() {
  // Unit circle through the first three points; (0,0) sits inside,
  // (7,3) and (1,1) outside.
  MatrixR m(2, 6);
  m << 1, 0, -1, 0, 7, 1,
       0, 1,  0, 0, 3, 1;
  const FunctionBasis circ = FunctionBasis::circle();
  const std::array<int, 3> s{0, 1, 2};
  CHECK(cgeneric_separating(m, circ, s, 3, 4) == -1);
  CHECK(cgeneric_separating(m, circ, s, 4, 5) == +1);
  CHECK(cgeneric_separating(m, circ, s, 3, 5) == -1);

  // The affine basis reduces to two simplex orientations.
  MatrixR am(2, 4);
  am << 0, 4, 1, 2,
        0, 0, 1, -1;
  const FunctionBasis aff = FunctionBasis::affine(2);
  const std::array<int, 2> seg{0, 1};
  CHECK(cgeneric_separating(am, aff, seg, 2, 3) == -1);
  MatrixR t1(2, 3), t2(2, 3);
  t1 << 0, 4, 1, 0, 0, 1;
  t2 << 0, 4, 2, 0, 0, -1;
  CHECK(simplex_orientation(t1) * simplex_orientation(t2) == -1);

  // Querying a point that sits on the hypersurface is a degeneracy, and
  // the subset must stay clear of the queried pair.
  MatrixR on(2, 5);
  on << 1, 0, -1, 0, 5,
        0, 1,  0, -1, 5;
  bool threw = false;
  try {
    (void)cgeneric_separating(on, circ, s, 3, 4);
  } catch (const GenericityError&) {
    threw = true;
  }
  CHECK_MSG(threw, "on-circle point must be flagged as degenerate");
  CHECK_THROWS_AS(cgeneric_separating(on, circ, s, 0, 4), InputError);
}

void curved_degeneracies() {
  // Four concyclic points defeat the circle lift; the witness names the
  // colex-first degenerate quadruple.
  MatrixR m(2, 5);
  m << 1, 0, -1, Rational(3, 5), 7,
       0, 1,  0, Rational(4, 5), 3;
  bool threw = false;
  try {
    (void)cgeneric_lift(m, FunctionBasis::circle());
  } catch (const GenericityError& e) {
    threw = true;
    CHECK(e.witness() == (std::vector<int>{0, 1, 2, 3}));
  }
  CHECK_MSG(threw, "cocircular quadruple must fail the circle lift");

  // Six points on one conic (the unit circle) defeat the conic lift.
  MatrixR six(2, 6);
  six << 1, 0, -1, 0, Rational(3, 5), Rational(-3, 5),
         0, 1,  0, -1, Rational(4, 5), Rational(4, 5);
  threw = false;
  try {
    (void)cgeneric_lift(six, FunctionBasis::conic());
  } catch (const GenericityError& e) {
    threw = true;
    CHECK(e.witness() == (std::vector<int>{0, 1, 2, 3, 4, 5}));
  }
  CHECK_MSG(threw, "six points on a conic must fail the conic lift");

  // A generically sampled six-point set clears the same lift.
  const MatrixR ok = random_cgeneric_points(6, FunctionBasis::conic(), 41);
  CHECK(cgeneric_lift(ok, FunctionBasis::conic()).size() == 6);
}

void antipodal_configurations() {
  MatrixR reps(2, 3);
  reps << 1, 0, -2,
          0, 1,  4;
  const AntipodalConfiguration a = AntipodalConfiguration::make(reps);
  CHECK(a.dim() == 2);
  CHECK(a.lines() == 3);
  // Third column is canonicalized to leading-coordinate-positive.
  CHECK(a.representatives()(0, 2) == Rational(2));
  CHECK(a.representatives()(1, 2) == Rational(-4));
  const VectorR vneg = a.vector_of({2, true});
  CHECK(vneg(0) == Rational(-2));
  CHECK(vneg(1) == Rational(4));
  CHECK(a.base().quotient().label(0) == "L0");
  CHECK(a.base().id({0, false}) == "L0+");

  MatrixR zero(2, 2);
  zero << 1, 0,
          0, 0;
  CHECK_THROWS_AS((void)AntipodalConfiguration::make(zero), InputError);

  MatrixR dependent(2, 3);
  dependent << 1, 2, 0,
               0, 0, 1;
  bool threw = false;
  try {
    (void)AntipodalConfiguration::make(dependent);
  } catch (const GenericityError& e) {
    threw = true;
    CHECK(e.witness() == (std::vector<int>{0, 1}));
  }
  CHECK_MSG(threw, "parallel lines must be rejected");
}

void line_fixtures() {
  // Three coordinate-ish lines: an odd structure (semi-orientation).
  MatrixR reps(2, 3);
  reps << 1, 0, 1,
          0, 1, 1;
  const AntipodalConfiguration a =
      AntipodalConfiguration::make(reps, GroundSet::indexed(3, "L"));
  const OrientedSignFunction phi = antipodal_phi(a);
  CHECK(phi.arity() == 2);
  CHECK(phi.signature() == -1);
  CHECK(phi.parity() == -1);
  CHECK(phi.eval(std::array<OrientedElement, 2>{
            OrientedElement{0, false}, OrientedElement{1, false}}) == +1);
  CHECK(phi.eval(std::array<OrientedElement, 2>{
            OrientedElement{1, false}, OrientedElement{2, false}}) == -1);

  const OrientedTwoPartition rho = line_structure(a);
  CHECK(rho.parity() == parity_sign(3 - 2, 2 - 1));
  CHECK(rho.parity() == -1);
  const auto [plus, minus] = semi_orientation_sections(rho);
  CHECK(plus == (std::vector<OrientedElement>{
                    {0, false}, {1, false}, {2, true}}));
  // The chosen section's vectors: (1,0), (0,1), and -(1,1).
  CHECK(a.vector_of(plus[2])(0) == Rational(-1));
  CHECK(a.vector_of(plus[2])(1) == Rational(-1));
  for (std::size_t i = 0; i < plus.size(); ++i) {
    CHECK(a.vector_of(minus[i]) == -a.vector_of(plus[i]));
  }

  // Four lines: an even structure splitting {L0,L1} from {L2,L3}.
  MatrixR four(2, 4);
  four << 1, 0, 1,  1,
          0, 1, 1, -1;
  const AntipodalConfiguration b = AntipodalConfiguration::make(four);
  const OrientedSignFunction psi = antipodal_phi(b);
  CHECK(psi.table() == (std::vector<Sign>{+1, +1, -1, -1, -1, -1}));
  const OrientedTwoPartition even = line_structure(b);
  CHECK(even.parity() == +1);
  CHECK(even.quotient_partition() ==
        TwoPartition(b.base().quotient(), {+1, +1, -1, -1}));
  const OrientedPairwiseSign table = ori_sigma_table(psi);
  CHECK(table.gamma() == -1);
  CHECK(table.gamma() == parity_sign(4 - 3, 2 - 2));

  // Parity law across a few random sizes.
  for (int d = 2; d <= 3; ++d) {
    for (int e = d; e <= d + 3; ++e) {
      const AntipodalConfiguration r = random_antipodal(
          e, d, static_cast<std::uint64_t>(100 * d + e));
      CHECK(line_structure(r).parity() == parity_sign(e - 2, d - 1));
    }
  }

  // antipodal_phi needs at least d lines.
  MatrixR narrow(3, 2);
  narrow << 1, 0,
            0, 1,
            0, 0;
  CHECK_THROWS_AS((void)antipodal_phi(AntipodalConfiguration::make(narrow)),
                  InputError);
}

void random_generators() {
  const Configuration a = random_generic(6, 2, 31);
  const Configuration b = random_generic(6, 2, 31);
  CHECK(a.points() == b.points());
  const Configuration c = random_generic(6, 2, 32);
  CHECK(a.points() != c.points());
  CHECK(!genericity_witness(a.points()).has_value());

  CHECK_THROWS_AS((void)random_generic(4, 2, 1, 10, 0), GenerationError);
  CHECK_THROWS_AS((void)random_generic(0, 2, 1), InputError);

  const MatrixR pts = random_cgeneric_points(5, FunctionBasis::circle(), 8);
  CHECK(pts == random_cgeneric_points(5, FunctionBasis::circle(), 8));
  (void)cgeneric_lift(pts, FunctionBasis::circle());

  const AntipodalConfiguration r1 = random_antipodal(4, 2, 9);
  const AntipodalConfiguration r2 = random_antipodal(4, 2, 9);
  CHECK(r1.representatives() == r2.representatives());
}

void io_layer() {
  // Parse: strings, integers, labels, antipodal flag.
  const std::string text = R"({
    "dim": 2,
    "points": [["1", "0"], ["0", "1"], ["-1/2", "3"]],
    "labels": ["a", "b", "c"]
  })";
  const ParsedPoints p = parse_points_text(text);
  CHECK(p.dim == 2);
  CHECK(p.points.cols() == 3);
  CHECK(p.points(0, 2) == Rational(-1, 2));
  CHECK(p.labels.label(1) == "b");
  CHECK(!p.antipodal);

  const ParsedPoints q = parse_points_text(
      R"({"dim": 1, "points": [[3], [5]], "antipodal": true})");
  CHECK(q.antipodal);
  CHECK(q.points(0, 1) == Rational(5));
  CHECK(q.labels.size() == 0);  // defaulted later by the consumer

  CHECK_THROWS_AS((void)parse_points_text("not json"), InputError);
  CHECK_THROWS_AS((void)parse_points_text(R"({"points": [[1]]})"), InputError);
  CHECK_THROWS_AS(
      (void)parse_points_text(R"({"dim": 2, "points": [[0.5, 1]]})"),
      InputError);
  CHECK_THROWS_AS(
      (void)parse_points_text(R"({"dim": 2, "points": [[1]]})"), InputError);
  CHECK_THROWS_AS(
      (void)parse_points_text(
          R"({"dim": 1, "points": [[1], [2]], "labels": ["x"]})"),
      InputError);

  // Round trip through configuration_json.
  const Configuration sq = Configuration::make(square_points());
  const ParsedPoints back = parse_points_json(configuration_json(sq));
  CHECK(back.dim == 2);
  CHECK(back.points == sq.points());
  CHECK(back.labels == sq.labels());

  // Partition serialization.
  const json pj = partition_json(geometric_partition(sq));
  CHECK(pj["classes"][0] == json::array({"P0", "P2"}));
  CHECK(pj["classes"][1] == json::array({"P1", "P3"}));
  CHECK(pj["trivial"] == false);

  // SVG scatter: one glyph per point, cherries round, plums square.
  const std::string svg = svg_scatter(sq, geometric_partition(sq));
  CHECK(svg.find("<svg") == 0);
  std::size_t cherries = 0, plums = 0, pos = 0;
  while ((pos = svg.find("class=\"cherry\"", pos)) != std::string::npos) {
    ++cherries;
    ++pos;
  }
  pos = 0;
  while ((pos = svg.find("class=\"plum\"", pos)) != std::string::npos) {
    ++plums;
    ++pos;
  }
  CHECK(cherries == 2);
  CHECK(plums == 2);
  CHECK(svg.find("<title>P3</title>") != std::string::npos);

  MatrixR line(1, 2);
  line << 0, 1;
  const Configuration c1 = Configuration::make(line);
  CHECK_THROWS_AS((void)svg_scatter(c1, geometric_partition(c1)), InputError);

  // Input digests: FNV-1a 64 with the standard offset basis.
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("abc") == "e71fa2190541574b");
  CHECK(input_digest("abc") != input_digest("abd"));
  CHECK(input_digest(text).size() == 16);
}

}  // namespace

int main() {
  rational_scalar();
  exact_linear_algebra();
  genericity();
  square_fixture();
  triangle_fixture();
  flip_fixtures();
  function_bases();
  degree_zero_interpolation();
  curved_separation();
  curved_degeneracies();
  antipodal_configurations();
  line_fixtures();
  random_generators();
  io_layer();
  return testsupport::finish("test_geometry");
}
