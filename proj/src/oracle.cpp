#include "negaz4/oracle.hpp"

#include "negaz4/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace negaz4 {

void Report::check(bool ok, const std::string& line) {
  details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  pass = pass && ok;
}

namespace {

std::string str(const BigInt& v) { return to_decimal(v); }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::set<CanonModule> join_closure(std::set<CanonModule> found, unsigned& rounds) {
  std::vector<CanonModule> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    ++rounds;
    const std::vector<CanonModule> known(found.begin(), found.end());
    std::set<CanonModule> fresh;
    for (const CanonModule& a : frontier)
      for (const CanonModule& b : known) {
        CanonModule c = module_sum(a, b);
        if (!found.count(c)) fresh.insert(std::move(c));
      }
    found.insert(fresh.begin(), fresh.end());
    frontier.assign(fresh.begin(), fresh.end());
  }
  return found;
}

}  // namespace

IdealLattice brute_force_all_ideals(const Z4Poly& modulus) {
  const Z4Poly monic = make_monic(modulus);
  const std::size_t m = static_cast<std::size_t>(monic.degree());
  if (2 * m > 8) throw std::invalid_argument("oracle scale limit");
  const std::size_t rank = 2 * m;
  const std::size_t elements = std::size_t{1} << (2 * rank);

  std::set<CanonModule> found;
  std::mutex guard;
  parallel_chunks(elements, [&](std::size_t begin, std::size_t end, unsigned) {
    std::set<CanonModule> local;
    Z4Vector v(rank);
    for (std::size_t code = begin; code < end; ++code) {
      for (std::size_t i = 0; i < rank; ++i) v[i] = static_cast<std::uint8_t>((code >> (2 * i)) & 3);
      local.insert(span(monic, {from_slots(v)}));
    }
    std::lock_guard<std::mutex> lock(guard);
    found.merge(local);
  });

  IdealLattice out;
  out.principal = static_cast<unsigned>(found.size());
  const std::set<CanonModule> all = join_closure(std::move(found), out.join_rounds);
  out.ideals.assign(all.begin(), all.end());
  return out;
}

IdealLattice brute_force_z4_ideals(const Z4Poly& modulus) {
  const Z4Poly monic = make_monic(modulus);
  const std::size_t m = static_cast<std::size_t>(monic.degree());
  if (m > 8) throw std::invalid_argument("oracle scale limit");
  const std::size_t elements = std::size_t{1} << (2 * m);

  std::set<CanonModule> found;
  std::mutex guard;
  parallel_chunks(elements, [&](std::size_t begin, std::size_t end, unsigned) {
    std::set<CanonModule> local;
    for (std::size_t code = begin; code < end; ++code) {
      Z4Vector c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = static_cast<std::uint8_t>((code >> (2 * i)) & 3);
      Z4Poly a(c);
      std::vector<Z4Vector> rows;
      for (std::size_t i = 0; i < m; ++i) {
        Z4Vector row(m, 0);
        for (std::size_t s = 0; s < m; ++s) row[s] = a[s];
        rows.push_back(std::move(row));
        a = z4_rem(shift(a, 1), monic);
      }
      local.insert({m, howell_form(std::move(rows), m)});
    }
    std::lock_guard<std::mutex> lock(guard);
    found.merge(local);
  });

  IdealLattice out;
  out.principal = static_cast<unsigned>(found.size());
  const std::set<CanonModule> all = join_closure(std::move(found), out.join_rounds);
  out.ideals.assign(all.begin(), all.end());
  return out;
}

Report verify_enumeration(unsigned n, unsigned k) {
  Report rep("enumeration n=" + str(n) + " k=" + str(k));
  const CodeSpecStream stream = enumerate_negacyclic(n, k);
  const IdealLattice lattice = brute_force_all_ideals(stream.ambient().modulus);
  rep.note("brute force: " + str(lattice.principal) + " principal ideals, " + str(lattice.join_rounds) +
           " join rounds, " + str(lattice.ideals.size()) + " ideals");

  bool closed = true;
  for (const CanonModule& c : lattice.ideals) closed = closed && is_ideal(stream.ambient().modulus, c);
  rep.check(closed, "every brute-force ideal is closed under x and u");

  std::map<CanonModule, unsigned> seen;
  bool sizes = true;
  for (const CodeSpec& spec : stream) {
    const CanonModule c = stream.span_of(spec);
    sizes = sizes && mod_card(c) == spec.total_size;
    ++seen[c];
  }
  const std::set<CanonModule> oracle(lattice.ideals.begin(), lattice.ideals.end());
  unsigned missing = 0, extra = 0, duplicate = 0;
  for (const CanonModule& c : oracle)
    if (!seen.count(c)) ++missing;
  for (const auto& [c, times] : seen) {
    if (!oracle.count(c)) ++extra;
    if (times > 1) duplicate += times - 1;
  }
  rep.summary = str(stream.size()) + "=" + str(oracle.size());
  rep.check(sizes, "declared sizes equal span cardinalities");
  rep.check(missing == 0 && extra == 0 && duplicate == 0,
            "enumeration " + str(stream.size()) + " = brute force " + str(oracle.size()) + " (missing " +
                str(missing) + ", extra " + str(extra) + ", duplicate " + str(duplicate) + ")");

  for (const LocalIdealFamily& fam : stream.families()) {
    std::array<BigInt, 5> tally{};
    for (const IdealSpec& s : fam.all()) tally[static_cast<int>(s.kase)] += 1;
    const auto expect = case_subtotals(fam.d(), k);
    std::string line = "factor " + str(fam.j() + 1) + " case subtotals";
    for (int c = 0; c < 5; ++c) line += (c ? "/" : " ") + str(tally[c]);
    rep.check(tally == expect, line);
  }

  if (n == 1) {
    const Z4Poly cyclic = Z4Poly::monomial(std::size_t{2} << k) - Z4Poly::constant(1);
    const IdealLattice cyc = brute_force_z4_ideals(cyclic);
    rep.check(BigInt(cyc.ideals.size()) == stream.size(),
              "Z4[z]/(z^" + str(2u << k) + " - 1) has " + str(cyc.ideals.size()) + " ideals");
  }
  return rep;
}

std::vector<ReferenceCode> reference_length2_codes() {
  const Z4Poly p{1, 1};  // x + 1
  const Z4Poly p2 = pow(p, 2), p3 = pow(p, 3);
  const Z4Poly one = Z4Poly::constant(1), two = Z4Poly::constant(2);
  using G = std::vector<RingElementPair>;
  return {
      {1, "<0>", G{}, 1},
      {2, "<1>", G{{one, {}}}, 256},
      {3, "<u>", G{{{}, one}}, 16},
      {4, "<u(x+1)>", G{{{}, p}}, 8},
      {5, "<u(x+1)^2>", G{{{}, p2}}, 4},
      {6, "<u(x+1)^3>", G{{{}, p3}}, 2},
      {7, "<x+1>", G{{p, {}}}, 64},
      {8, "<(x+1)^2>", G{{p2, {}}}, 16},
      {9, "<(x+1)^3>", G{{p3, {}}}, 4},
      {10, "<(x+1)+u>", G{{p, one}}, 64},
      {11, "<(x+1)^2+u>", G{{p2, one}}, 16},
      {12, "<(x+1)^2+u(x+1)>", G{{p2, p}}, 16},
      {13, "<(x+1)^2+u(1+(x+1))>", G{{p2, one + p}}, 16},
      {14, "<(x+1)^3+u>", G{{p3, one}}, 16},
      {15, "<(x+1)^3+u(x+1)>", G{{p3, p}}, 8},
      {16, "<(x+1)^3+2u>", G{{p3, two}}, 4},
      {17, "<x+1, u>", G{{p, {}}, {{}, one}}, 128},
      {18, "<(x+1)^2, u>", G{{p2, {}}, {{}, one}}, 64},
      {19, "<(x+1)^2, u(x+1)>", G{{p2, {}}, {{}, p}}, 32},
      {20, "<(x+1)^2+u, u(x+1)>", G{{p2, one}, {{}, p}}, 32},
      {21, "<(x+1)^3, u>", G{{p3, {}}, {{}, one}}, 32},
      {22, "<(x+1)^3, u(x+1)>", G{{p3, {}}, {{}, p}}, 16},
      {23, "<(x+1)^3, 2u>", G{{p3, {}}, {{}, two}}, 8},
      {24, "<(x+1)^3+2u, u(x+1)>", G{{p3, two}, {{}, p}}, 16},
  };
}

std::vector<CorrespondenceRow> length2_correspondence() {
  using C = IdealCase;
  return {
      {C::I, {}, {}, {{1, 0}, {2, 0}}, 3},
      {C::I, {}, {}, {{1, 1}, {2, 0}}, 11},
      {C::I, {}, {}, {{1, 1}, {2, 1}}, 13},
      {C::I, {}, {}, {{1, 0}, {2, 1}}, 14},
      {C::II, 1, {}, {{1, 0}}, 4},
      {C::II, 2, {}, {{0, 0}}, 5},
      {C::II, 3, {}, {}, 6},
      {C::II, 1, {}, {{1, 1}}, 15},
      {C::II, 2, {}, {{0, 1}}, 16},
      {C::III, 4, {}, {}, 1},
      {C::III, 0, {}, {}, 2},
      {C::III, 1, {}, {}, 7},
      {C::III, 2, {}, {}, 8},
      {C::III, 3, {}, {}, 9},
      {C::IV, {}, 2, {{0, 1}}, 10},
      {C::IV, {}, 1, {}, 17},
      {C::IV, {}, 2, {{0, 0}}, 18},
      {C::IV, {}, 3, {{1, 1}}, 20},
      {C::IV, {}, 3, {{1, 0}}, 21},
      {C::V, 1, 2, {{0, 1}}, 12},
      {C::V, 1, 2, {{0, 0}}, 22},
      {C::V, 1, 1, {}, 19},
      {C::V, 2, 1, {}, 23},
  };
}

Report verify_length2_reference() {
  Report rep("length-2 reference table");
  const Z4Poly modulus{1, 0, 1};  // x^2 + 1
  const auto refs = reference_length2_codes();
  std::vector<CanonModule> spans;
  for (const ReferenceCode& r : refs) {
    spans.push_back(span(modulus, r.generators));
    rep.check(mod_card(spans.back()) == r.size,
              "C" + str(r.index) + " = " + r.label + " has " + str(mod_card(spans.back())) + " codewords");
  }
  rep.check(spans[21] == spans[23], "C22 = C24");
  rep.summary = spans[21] == spans[23] ? "C22=C24" : "C22!=C24";
  std::set<CanonModule> first23(spans.begin(), spans.begin() + 23);
  rep.check(first23.size() == 23, "C1..C23 pairwise distinct (" + str(first23.size()) + ")");

  rep.check(claimed_length2k_count(1) == 24 && count_local_ideals(1, 1) == 23,
            "comparison formula gives " + str(claimed_length2k_count(1)) + " > " + str(count_local_ideals(1, 1)));

  const LocalIdealFamily fam(make_ctx(Z4Poly{3, 1}, 1), 0);
  std::set<unsigned> hit;
  std::set<CanonModule> members;
  for (const CorrespondenceRow& row : length2_correspondence()) {
    std::map<unsigned, Z4Poly> digits;
    for (const auto& [i, b] : row.digits) digits[i] = Z4Poly::constant(b);
    const IdealSpec spec = fam.make(row.kase, row.lambda, row.t, digits);
    const CanonModule c = fam.span_of(spec);
    members.insert(c);
    hit.insert(row.reference);
    std::string name = "case " + to_string(row.kase);
    if (row.lambda) name += " lambda=" + str(*row.lambda);
    if (row.t) name += " t=" + str(*row.t);
    for (const auto& [i, b] : row.digits) name += " b" + str(i) + "=" + str(b);
    rep.check(c == spans[row.reference - 1], name + " equals C" + str(row.reference));
  }
  rep.check(hit.size() == 23 && members.size() == 23 && BigInt(23) == fam.count(),
            "correspondence covers all 23 enumerated ideals");
  return rep;
}

SelfDualCensus self_dual_census(unsigned n, unsigned k) {
  const CodeSpecStream stream = enumerate_negacyclic(n, k);
  if (stream.size() > pow2(20)) throw std::invalid_argument("self-dual census scale limit");
  SelfDualCensus out;
  for (const CodeSpec& spec : stream) {
    CanonModule c = stream.span_of(spec);
    if (c == dual(c)) {
      out.specs.push_back(spec);
      out.codes.push_back(std::move(c));
    }
  }
  return out;
}

Report verify_galois_ideals(const Z4Poly& f) {
  const unsigned d = static_cast<unsigned>(f.degree());
  Report rep("Galois ring ideals, f = " + to_string(f));
  const IdealLattice lattice = brute_force_all_ideals(f);
  rep.note("brute force: " + str(lattice.principal) + " principal ideals, " + str(lattice.join_rounds) +
           " join rounds");
  rep.check(BigInt(lattice.ideals.size()) == pow2(d) + 5,
            str(lattice.ideals.size()) + " ideals, expected 2^" + str(d) + " + 5");

  std::multiset<BigInt> got, expect;
  for (const CanonModule& c : lattice.ideals) got.insert(mod_card(c));
  for (unsigned i = 0; i <= 2; ++i) expect.insert(pow2(2ul * d * (2 - i)));
  for (unsigned s = 0; s <= 1; ++s) expect.insert(pow2(static_cast<unsigned long>(d) * (2 - s)));
  for (BigInt h = 1; h < pow2(d); ++h) expect.insert(pow2(2ul * d));
  expect.insert(pow2(3ul * d));
  rep.check(got == expect, "size table matches");

  const LocalIdealFamily fam = LocalIdealFamily::galois(f, 0);
  std::set<CanonModule> listed;
  bool sizes = true;
  for (const IdealSpec& s : fam.all()) {
    const CanonModule c = fam.span_of(s);
    sizes = sizes && mod_card(c) == s.size;
    listed.insert(c);
  }
  rep.check(sizes, "listed sizes equal span cardinalities");
  rep.check(listed == std::set<CanonModule>(lattice.ideals.begin(), lattice.ideals.end()),
            "listed ideals equal the brute-force lattice");
  return rep;
}

Report verify_cyclic_odd(unsigned n) {
  Report rep("odd cyclic n=" + str(n));
  const FactorSet fs = factor_yn_minus_1(n);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs.degrees[j] > 4) {
      rep.note("factor " + str(j + 1) + " of degree " + str(fs.degrees[j]) + " skipped (oracle scale limit)");
      continue;
    }
    const Report sub = verify_galois_ideals(fs.factors[j]);
    for (const std::string& line : sub.details) rep.details.push_back("factor " + str(j + 1) + ": " + line);
    rep.pass = rep.pass && sub.pass;
  }
  const BigInt count = enumerate_cyclic_odd(n).size();
  rep.check(count == count_cyclic_odd(n), "enumeration yields " + str(count) + " codes");
  rep.summary = str(count) + " codes";
  return rep;
}

}  // namespace negaz4
