//  Copyright 2026 The mulat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "mulat/error.hpp"
#include "mulat/mu.hpp"
#include "mulat/suite.hpp"

namespace mulat {

namespace {

using Status = CheckOutcome::Status;

struct Example {
  std::string name;
  std::string claim;
  std::shared_ptr<const Instance> fixture;
  std::function<CheckOutcome(const FiniteLattice&)> run;
};

Elem at(const FiniteLattice& l, const std::string& label) {
  const auto x = l.find(label);
  if (!x) throw Error(ErrorCode::IndexOutOfRange, "no element labelled '" + label + "'");
  return *x;
}

// Collects failed expectations; the first one becomes the counterexample.
class Expect {
 public:
  explicit Expect(const FiniteLattice& l) : l_(l) {}

  void that(bool ok, std::vector<Elem> elements, const std::string& what) {
    if (!ok && outcome_.status != Status::fail) {
      outcome_.status = Status::fail;
      outcome_.elements = std::move(elements);
      outcome_.detail = what;
    }
  }

  CheckOutcome done() {
    outcome_.elements_tested = l_.size();
    return outcome_;
  }

 private:
  const FiniteLattice& l_;
  CheckOutcome outcome_;
};

std::set<Elem> as_set(std::optional<ElemPair> p) {
  if (!p) return {};
  return {p->first, p->second};
}

// y, z witness that x is not mu: y ∧ z, x ∧ y, x ∧ z nonzero, x ∧ y ∧ z zero.
bool witnesses_not_mu(const FiniteLattice& l, Elem x, Elem y, Elem z) {
  const Elem o = l.bottom();
  return l.meet(y, z) != o && l.meet(x, y) != o && l.meet(x, z) != o &&
         l.meet(x, l.meet(y, z)) == o;
}

std::shared_ptr<const Instance> zn(std::uint64_t n) {
  return std::make_shared<const Instance>(make_instance("Z" + std::to_string(n), zn_ideals(n)));
}

std::shared_ptr<const Instance> powerset(int k) {
  return std::make_shared<const Instance>(
      make_instance("powerset" + std::to_string(k), "powerset", powerset_frame(k)));
}

std::vector<Example> make_examples() {
  const auto z12 = zn(12), z30 = zn(30), z36 = zn(36), z180 = zn(180), z900 = zn(900);
  const auto p3 = powerset(3), p5 = powerset(5);
  const auto pid = std::make_shared<const Instance>(make_instance(
      "R[x]/(x^2(x+1)(x+2))", ideal_quantale(FactoredModulus{{"x", "x+1", "x+2"}, {2, 1, 1}})));

  std::vector<Example> ex;

  ex.push_back({"example-z12-mu-set",
                "every ideal of Z12 is mu; (3) is mu but not essential, witness (4)", z12,
                [](const FiniteLattice& l) {
                  Expect e(l);
                  e.that(mu_elements(l).size() == 6, {}, "not all six ideals are mu");
                  const Elem three = at(l, "(3)"), four = at(l, "(4)");
                  e.that(is_mu(l, three), {three}, "(3) is not mu");
                  e.that(essential_witness(whole(l), three) == four, {three},
                         "(3) lacks the essential witness (4)");
                  return e.done();
                }});

  ex.push_back({"example-z12-pseudo-complement", "the pseudo-complement of (3) in Z12 is (4)",
                z12, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem three = at(l, "(3)");
                  e.that(pseudo_complement(l, three) == at(l, "(4)"), {three},
                         "pseudo-complement of (3) is not (4)");
                  return e.done();
                }});

  ex.push_back({"example-z30-two", "(2) in Z30 is not mu, witnessed by (3) and (5)", z30,
                [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem two = at(l, "(2)"), three = at(l, "(3)"), five = at(l, "(5)");
                  e.that(!is_mu(l, two), {two}, "(2) is mu");
                  e.that(as_set(mu_witness(whole(l), two)) == std::set<Elem>{three, five},
                         {two}, "witness of (2) is not {(3), (5)}");
                  e.that(witnesses_not_mu(l, two, three, five), {two, three, five},
                         "(3), (5) do not witness (2)");
                  return e.done();
                }});

  ex.push_back({"example-powerset3-mu-set",
                "in P({1,2,3}) the mu-elements are the empty set, the singletons and X; "
                "{1,2} is not mu, witnessed by {1,3} and {2,3}",
                p3, [](const FiniteLattice& l) {
                  Expect e(l);
                  const std::vector<Elem> expected{at(l, "∅"), at(l, "{1}"), at(l, "{2}"),
                                                   at(l, "{3}"), at(l, "X")};
                  auto got = mu_elements(l);
                  auto want = expected;
                  std::sort(want.begin(), want.end());
                  e.that(got == want, got, "mu-set differs");
                  const Elem x = at(l, "{1,2}"), y = at(l, "{1,3}"), z = at(l, "{2,3}");
                  e.that(!is_mu(l, x), {x}, "{1,2} is mu");
                  e.that(as_set(mu_witness(whole(l), x)) == std::set<Elem>{y, z}, {x},
                         "witness of {1,2} is not {{1,3}, {2,3}}");
                  return e.done();
                }});

  ex.push_back({"example-z180", "(5) is maximal in Z180 but not mu; the radical (30) is not mu",
                z180, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem five = at(l, "(5)"), thirty = at(l, "(30)");
                  const auto maxes = maximal_elements(l);
                  e.that(std::find(maxes.begin(), maxes.end(), five) != maxes.end(), {five},
                         "(5) is not maximal");
                  e.that(l.meet_all(maxes) == thirty, {thirty}, "radical is not (30)");
                  e.that(!is_mu(l, five), {five}, "(5) is mu");
                  e.that(!is_mu(l, thirty), {thirty}, "(30) is mu");
                  return e.done();
                }});

  ex.push_back({"example-pid-quotient",
                "the mu-ideals of R[x]/(x^2(x+1)(x+2)) are exactly seven named ideals", pid,
                [](const FiniteLattice& l) {
                  Expect e(l);
                  for (const char* s : {"(0)", "(x)", "(x^2(x+1))", "(x^2(x+2))",
                                        "((x+1)(x+2))", "(x(x+1)(x+2))", "(1)"}) {
                    const Elem x = at(l, s);
                    e.that(is_mu(l, x), {x}, std::string(s) + " is not mu");
                  }
                  for (const char* s : {"(x^2)", "(x+1)", "(x+2)", "(x(x+1))", "(x(x+2))"}) {
                    const Elem x = at(l, s);
                    e.that(!is_mu(l, x), {x}, std::string(s) + " is mu");
                  }
                  e.that(mu_elements(l).size() == 7, {}, "mu count is not seven");
                  return e.done();
                }});

  // (4) is itself mu, so the zero ideal is a mu-complement as well.
  ex.push_back({"example-z12-mu-complements",
                "the nonzero mu-complements of (4) in Z12 are (3) and (6); with the zero "
                "ideal they are all of them",
                z12, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem four = at(l, "(4)");
                  const auto got = mu_complements(l, four);
                  std::vector<Elem> nonzero;
                  for (Elem y : got)
                    if (y != l.bottom()) nonzero.push_back(y);
                  std::vector<Elem> want{at(l, "(3)"), at(l, "(6)")};
                  std::sort(want.begin(), want.end());
                  e.that(nonzero == want, got, "nonzero mu-complements of (4) differ");
                  want.push_back(l.bottom());
                  std::sort(want.begin(), want.end());
                  e.that(got == want, got, "mu-complements of (4) differ");
                  return e.done();
                }});

  ex.push_back({"example-powerset3-mu-closed",
                "{1} is a complement in P({1,2,3}) but not mu-closed, witness {1,2}; {1,2} is "
                "mu-closed",
                p3, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem one = at(l, "{1}"), onetwo = at(l, "{1,2}");
                  e.that(pseudo_complement(l, at(l, "{2,3}")) == one, {one},
                         "{1} is not the pseudo-complement of {2,3}");
                  e.that(mu_closed_witness(whole(l), one) == onetwo, {one},
                         "{1} lacks the mu-closed witness {1,2}");
                  e.that(mu_in_down(l, onetwo, one), {one, onetwo}, "{1} not mu in {1,2}-down");
                  e.that(is_mu_closed(l, onetwo), {onetwo}, "{1,2} is not mu-closed");
                  return e.done();
                }});

  ex.push_back({"example-upset-not-global",
                "{2,3} is mu in {2}-up of P({1,2,3}) but not mu in P({1,2,3})", p3,
                [p3](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem two = at(l, "{2}"), twothree = at(l, "{2,3}");
                  e.that(mu_in_up(*p3->quantale, two, twothree), {two, twothree},
                         "{2,3} is not mu in {2}-up");
                  e.that(!is_mu(l, twothree), {twothree}, "{2,3} is mu");
                  return e.done();
                }});

  ex.push_back({"example-upset-join",
                "in P({1..5}), {1,2} is mu in {1}-up and {3,4} in {3}-up, but {1,2,3,4} is mu "
                "neither in {1,3}-up nor in P({1..5})",
                p5, [p5](const FiniteLattice& l) {
                  Expect e(l);
                  const Quantale& q = *p5->quantale;
                  const Elem a = at(l, "{1,2}"), b = at(l, "{3,4}"), c = at(l, "{1,2,3,4}");
                  const Elem one = at(l, "{1}"), three = at(l, "{3}"), both = at(l, "{1,3}");
                  e.that(mu_in_up(q, one, a), {one, a}, "{1,2} not mu in {1}-up");
                  e.that(mu_in_up(q, three, b), {three, b}, "{3,4} not mu in {3}-up");
                  e.that(l.join(a, b) == c && l.join(one, three) == both, {}, "join labels");
                  e.that(!mu_in_up(q, both, c), {both, c}, "{1,2,3,4} is mu in {1,3}-up");
                  e.that(!is_mu(l, c), {c}, "{1,2,3,4} is mu");
                  return e.done();
                }});

  ex.push_back({"example-maximal-disjoint",
                "for a = {1}, b = {2,3} in P({1,2,3}) the maximal c above a disjoint from b is "
                "{1}, yet a is also mu in {1,2}-down",
                p3, [p3](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem a = at(l, "{1}"), b = at(l, "{2,3}"), c = at(l, "{1,2}");
                  e.that(maximal_above_disjoint(*p3->quantale, a, b) == std::vector<Elem>{a},
                         {a, b}, "maximal set is not {{1}}");
                  e.that(mu_in_down(l, a, a), {a}, "{1} not mu in {1}-down");
                  e.that(mu_in_down(l, c, a), {a, c}, "{1} not mu in {1,2}-down");
                  return e.done();
                }});

  ex.push_back({"example-muclosed-converse",
                "in P({1,2,3}) every mu b above {1} is mu in {1}-up, the only such b being {1} "
                "and X, while {1} is not mu-closed",
                p3, [p3](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem a = at(l, "{1}");
                  std::vector<Elem> above;
                  for (Elem b = 0; b < l.size(); ++b)
                    if (l.leq(a, b) && is_mu(l, b)) {
                      above.push_back(b);
                      e.that(mu_in_up(*p3->quantale, a, b), {a, b}, "mu b not mu in {1}-up");
                    }
                  e.that(above == std::vector<Elem>{a, l.top()}, above, "mu elements above {1}");
                  e.that(!is_mu_closed(l, a), {a}, "{1} is mu-closed");
                  return e.done();
                }});

  ex.push_back({"negative-join",
                "{1} and {3} are mu in P({1,2,3}) but their join is not, witnessed by A = {1,2} "
                "and B = {2,3}",
                p3, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem x = at(l, "{1}"), y = at(l, "{3}"), a = at(l, "{1,2}"),
                             b = at(l, "{2,3}");
                  const Elem j = l.join(x, y);
                  e.that(is_mu(l, x) && is_mu(l, y), {x, y}, "singletons not mu");
                  e.that(!is_mu(l, j), {j}, "join is mu");
                  e.that(witnesses_not_mu(l, j, a, b), {j, a, b}, "A, B do not witness");
                  return e.done();
                }});

  ex.push_back({"negative-complement",
                "the atom {1} of P({1,2,3}) is mu but its complement {2,3} is not, witnessed "
                "by {1,2} and {1,3}",
                p3, [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem a = at(l, "{1}"), c = at(l, "{2,3}");
                  e.that(is_mu(l, a), {a}, "{1} not mu");
                  e.that(complements_of(l, a) == std::vector<Elem>{c}, {a}, "complement of {1}");
                  e.that(!is_mu(l, c), {c}, "{2,3} is mu");
                  e.that(witnesses_not_mu(l, c, at(l, "{1,2}"), at(l, "{1,3}")), {c},
                         "{1,2}, {1,3} do not witness");
                  return e.done();
                }});

  ex.push_back({"negative-dual-atom", "the dual atom {2,3} of P({1,2,3}) is not mu", p3,
                [](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem c = at(l, "{2,3}");
                  const auto maxes = maximal_elements(l);
                  e.that(std::find(maxes.begin(), maxes.end(), c) != maxes.end(), {c},
                         "{2,3} is not a dual atom");
                  e.that(!is_mu(l, c), {c}, "{2,3} is mu");
                  return e.done();
                }});

  ex.push_back({"negative-product",
                "(6) and (10) are mu in Z900 but their product (60) is not", z900,
                [z900](const FiniteLattice& l) {
                  Expect e(l);
                  const Elem six = at(l, "(6)"), ten = at(l, "(10)"), sixty = at(l, "(60)");
                  e.that(is_mu(l, six) && is_mu(l, ten), {six, ten}, "(6) or (10) not mu");
                  e.that(z900->quantale->mult(six, ten) == sixty, {six, ten},
                         "(6)(10) is not (60)");
                  e.that(!is_mu(l, sixty), {sixty}, "(60) is mu");
                  return e.done();
                }});

  // Finite stand-in for an infinite meet: nonzero proper mu-elements whose meet
  // collapses to the zero ideal.
  ex.push_back({"negative-arbitrary-meet",
                "(4), (6), (9) are nonzero proper mu-elements of Z36 whose meet is the zero "
                "ideal",
                z36, [](const FiniteLattice& l) {
                  Expect e(l);
                  const std::vector<Elem> xs{at(l, "(4)"), at(l, "(6)"), at(l, "(9)")};
                  for (Elem x : xs) e.that(is_mu(l, x) && x != l.top() && x != l.bottom(), {x},
                                           "not a nonzero proper mu-element");
                  e.that(l.meet_all(xs) == l.bottom(), xs, "meet is not zero");
                  e.that(l.meet(xs[0], xs[2]) == l.bottom(), {xs[0], xs[2]},
                         "(4) and (9) meet nontrivially");
                  return e.done();
                }});

  return ex;
}

}  // namespace

SuiteReport run_examples() {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  for (const auto& ex : make_examples()) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    r.name = ex.name;
    r.claim = ex.claim;
    r.instances_tested = 1;
    CheckOutcome out;
    try {
      out = ex.run(ex.fixture->lattice);
    } catch (const Error& e) {
      out = {Status::fail, ex.fixture->lattice.size(), {}, e.what()};
    }
    r.elements_tested = out.elements_tested;
    if (out.status == Status::fail) {
      r.passed = false;
      Counterexample ce{ex.fixture, out.elements, {}, out.detail};
      for (Elem x : ce.elements) ce.element_labels.push_back(ex.fixture->lattice.label(x));
      r.counterexample = std::move(ce);
    }
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  report.instance_count = report.checks.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mulat
