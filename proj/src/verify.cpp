#include "dendrikit/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <thread>

#include "dendrikit/ncqsym.hpp"
#include "dendrikit/polyoracle.hpp"
#include "dendrikit/qsym.hpp"
#include "dendrikit/sylvester.hpp"
#include "dendrikit/tits.hpp"
#include "dendrikit/trees.hpp"

namespace dendrikit {

namespace {

constexpr std::size_t kChunk = 1024;

const std::vector<std::size_t> kSchroeder{1, 3, 11, 45, 197, 903};

// Deterministic parallel sweep: fixed chunking, per-chunk counterexample
// cap, merge in chunk order. The outcome is independent of jobs.
template <typename Fn>
void sweep(std::size_t total, const VerifyOptions& opt, SuiteReport& rep, Fn&& fn) {
  if (total == 0) return;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::string>> found(chunks);
  auto work = [&](std::size_t c) {
    std::vector<std::string>& out = found[c];
    const std::size_t hi = std::min(total, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < hi; ++i) {
      try {
        fn(i, out);
      } catch (const std::exception& e) {
        out.push_back(std::string("exception at item ") + std::to_string(i) + ": " + e.what());
      }
      if (out.size() > opt.limit) out.resize(opt.limit);
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) work(c);
      });
    for (auto& t : pool) t.join();
  }
  rep.checks += total;
  for (auto& chunk : found)
    for (auto& ce : chunk) rep.counterexamples.push_back(std::move(ce));
}

void finalize(SuiteReport& rep, std::size_t limit, std::chrono::steady_clock::time_point t0) {
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  if (rep.counterexamples.size() > limit) rep.counterexamples.resize(limit);
  rep.pass = rep.counterexamples.empty();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int effective_degree(const char* family, int family_default, const VerifyOptions& opt) {
  int d = opt.max_degree > 0 ? opt.max_degree : family_default;
  d = std::min(d, opt.bound);
  if (d > family_default)
    std::fprintf(stderr, "warning: %s sweep raised to degree %d (default %d); runtime grows steeply\n",
                 family, d, family_default);
  return d;
}

std::string ws(const PackedWord& u) { return "[" + u.str() + "]"; }

std::vector<std::vector<PackedWord>> packed_table(int max_degree, int bound) {
  std::vector<std::vector<PackedWord>> table(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) table[static_cast<std::size_t>(d)] = enumerate_packed(d, bound);
  return table;
}

NCQSymElement vfull(const NCQSymElement& x, const NCQSymElement& y, bool corrupt) {
  NCQSymElement r = product_full(x, y);
  if (corrupt && !r.is_zero_elt()) {
    NCQSymElement damaged;
    bool first = true;
    for (const auto& [k, c] : r.terms()) {
      if (!first) damaged.add_term(k, c);
      first = false;
    }
    return damaged;
  }
  return r;
}

// Axioms 1..7 plus full associativity as 8; returns the failing indices.
std::vector<int> failing_axioms(const NCQSymElement& x, const NCQSymElement& y,
                                const NCQSymElement& z, bool corrupt) {
  auto dot = [corrupt](const NCQSymElement& a, const NCQSymElement& b) {
    return vfull(a, b, corrupt);
  };
  std::vector<int> bad;
  auto check = [&](int idx, const NCQSymElement& lhs, const NCQSymElement& rhs) {
    if (!(lhs == rhs)) bad.push_back(idx);
  };
  check(1, product_prec(product_prec(x, y), z), product_prec(x, dot(y, z)));
  check(2, product_prec(product_succ(x, y), z), product_succ(x, product_prec(y, z)));
  check(3, product_succ(dot(x, y), z), product_succ(x, product_succ(y, z)));
  check(4, product_circ(product_succ(x, y), z), product_succ(x, product_circ(y, z)));
  check(5, product_circ(product_prec(x, y), z), product_circ(x, product_succ(y, z)));
  check(6, product_prec(product_circ(x, y), z), product_circ(x, product_prec(y, z)));
  check(7, product_circ(product_circ(x, y), z), product_circ(x, product_circ(y, z)));
  check(8, dot(dot(x, y), z), dot(x, dot(y, z)));
  return bad;
}

std::string axiom_name(int idx) { return idx == 8 ? "assoc" : "axiom" + std::to_string(idx); }

struct PairSpace {
  // Nonempty-degree pairs (i, j) with i + j <= total, flattened.
  std::vector<std::pair<const PackedWord*, const PackedWord*>> pairs;

  PairSpace(const std::vector<std::vector<PackedWord>>& table, int total, int min_deg = 1) {
    for (int i = min_deg; i + min_deg <= total; ++i)
      for (int j = min_deg; i + j <= total; ++j)
        for (const PackedWord& u : table[static_cast<std::size_t>(i)])
          for (const PackedWord& v : table[static_cast<std::size_t>(j)])
            pairs.emplace_back(&u, &v);
  }
};

SuiteReport suite_axioms(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "axioms";
  const int D = effective_degree("axioms", 6, opt);
  const int R = std::min(opt.max_degree > 0 ? opt.max_degree + 2 : 8, opt.bound);
  rep.params = {{"degree", std::to_string(D)},
                {"random_degree", std::to_string(R)},
                {"samples", std::to_string(opt.samples)},
                {"seed", std::to_string(opt.seed)},
                {"corrupt", opt.corrupt ? "true" : "false"}};
  auto table = packed_table(D, opt.bound);

  PairSpace ps(table, D);
  sweep(ps.pairs.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord &u = *ps.pairs[i].first, &v = *ps.pairs[i].second;
    NCQSymElement x(u), y(v);
    NCQSymElement split = product_prec(x, y) + product_circ(x, y) + product_succ(x, y);
    if (!(split == vfull(x, y, opt.corrupt)))
      out.push_back("split u=" + ws(u) + " v=" + ws(v));
  });

  std::vector<std::array<const PackedWord*, 3>> triples;
  for (int i = 1; i + 2 <= D; ++i)
    for (int j = 1; i + j + 1 <= D; ++j)
      for (int k = 1; i + j + k <= D; ++k)
        for (const PackedWord& u : table[static_cast<std::size_t>(i)])
          for (const PackedWord& v : table[static_cast<std::size_t>(j)])
            for (const PackedWord& w : table[static_cast<std::size_t>(k)])
              triples.push_back({&u, &v, &w});
  sweep(triples.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const auto& [u, v, w] = triples[i];
    for (int idx : failing_axioms(NCQSymElement(*u), NCQSymElement(*v), NCQSymElement(*w),
                                  opt.corrupt))
      out.push_back(axiom_name(idx) + " x=" + ws(*u) + " y=" + ws(*v) + " z=" + ws(*w));
  });

  auto rtable = packed_table(std::max(1, R - 2), opt.bound);
  sweep(static_cast<std::size_t>(std::max(0, opt.samples)), opt, rep,
        [&](std::size_t i, std::vector<std::string>& out) {
          std::mt19937_64 rng(opt.seed + 0x9E3779B97F4A7C15ULL * (i + 1));
          auto rand_elt = [&](int deg) {
            const auto& basis = rtable[static_cast<std::size_t>(deg)];
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            std::uniform_int_distribution<int> num(-4, 4), den(1, 3), nterms(1, 3);
            NCQSymElement e;
            for (int t = nterms(rng); t > 0; --t) {
              Rational c(num(rng), den(rng));
              c.canonicalize();
              e.add_term(basis[pick(rng)], c);
            }
            return e;
          };
          int d1 = std::uniform_int_distribution<int>(1, R - 2)(rng);
          int d2 = std::uniform_int_distribution<int>(1, R - 1 - d1)(rng);
          int d3 = std::uniform_int_distribution<int>(1, R - d1 - d2)(rng);
          for (int idx : failing_axioms(rand_elt(d1), rand_elt(d2), rand_elt(d3), opt.corrupt))
            out.push_back(axiom_name(idx) + " random sample " + std::to_string(i) +
                          " degrees " + std::to_string(d1) + "+" + std::to_string(d2) + "+" +
                          std::to_string(d3));
        });

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_oracle(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "oracle";
  const int D = effective_degree("oracle", 5, opt);
  rep.params = {{"degree", std::to_string(D)}};
  auto table = packed_table(D, opt.bound);
  PairSpace ps(table, D);
  sweep(ps.pairs.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord &u = *ps.pairs[i].first, &v = *ps.pairs[i].second;
    const int n = static_cast<int>(u.size() + v.size());
    NCPolynomial pu = expand(u, n), pv = expand(v, n);
    NCQSymElement x(u), y(v);
    if (!(project_pack(poly_mul(pu, pv)) == product_full(x, y)))
      out.push_back("full u=" + ws(u) + " v=" + ws(v));
    if (!(project_pack(poly_prec(pu, pv)) == product_prec(x, y)))
      out.push_back("prec u=" + ws(u) + " v=" + ws(v));
    if (!(project_pack(poly_circ(pu, pv)) == product_circ(x, y)))
      out.push_back("circ u=" + ws(u) + " v=" + ws(v));
    if (!(project_pack(poly_succ(pu, pv)) == product_succ(x, y)))
      out.push_back("succ u=" + ws(u) + " v=" + ws(v));
  });
  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_hopf(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "hopf";
  const int D = effective_degree("hopf", 5, opt);
  rep.params = {{"degree", std::to_string(D)}};
  auto table = packed_table(D, opt.bound);

  std::vector<const PackedWord*> words;
  for (int d = 0; d <= D; ++d)
    for (const PackedWord& u : table[static_cast<std::size_t>(d)]) words.push_back(&u);
  sweep(words.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord& u = *words[i];
    NCQSymElement x(u);
    TensorElement<PackedWord> d = coproduct(x);
    std::map<std::array<PackedWord, 3>, Rational> left, right;
    for (const auto& [kk, c] : d.terms()) {
      TensorElement<PackedWord> dl = coproduct(NCQSymElement(kk.first));
      for (const auto& [kl, cl] : dl.terms())
        left[{kl.first, kl.second, kk.second}] += c * cl;
      TensorElement<PackedWord> dr = coproduct(NCQSymElement(kk.second));
      for (const auto& [kr, cr] : dr.terms())
        right[{kk.first, kr.first, kr.second}] += c * cr;
    }
    std::erase_if(left, [](const auto& kv) { return is_zero(kv.second); });
    std::erase_if(right, [](const auto& kv) { return is_zero(kv.second); });
    if (left != right) out.push_back("coassoc u=" + ws(u));
    NCQSymElement eps_id, id_eps;
    for (const auto& [kk, c] : d.terms()) {
      eps_id.add_term(kk.second, c * counit(NCQSymElement(kk.first)));
      id_eps.add_term(kk.first, c * counit(NCQSymElement(kk.second)));
    }
    if (!(eps_id == x && id_eps == x)) out.push_back("counit u=" + ws(u));
  });

  PairSpace ps(table, D, 0);
  sweep(ps.pairs.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord &u = *ps.pairs[i].first, &v = *ps.pairs[i].second;
    NCQSymElement x(u), y(v);
    if (!(coproduct(product_full(x, y)) == tensor_product_full(coproduct(x), coproduct(y))))
      out.push_back("morphism u=" + ws(u) + " v=" + ws(v));
  });

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_tits(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "tits";
  const int Dp = effective_degree("tits pairs", 5, opt);
  const int Da = opt.max_degree > 0 ? std::min(opt.max_degree, opt.bound) : 4;
  rep.params = {{"pair_degree", std::to_string(Dp)}, {"assoc_degree", std::to_string(Da)}};
  auto table = packed_table(std::max(Dp, Da), opt.bound);

  if (table.size() > 3 && table[3].size() != 13)
    rep.counterexamples.push_back("dimension at degree 3 is " + std::to_string(table[3].size()));
  ++rep.checks;

  for (int n = 1; n <= Dp; ++n) {
    const auto& words = table[static_cast<std::size_t>(n)];
    const PackedWord one(Word(std::vector<int>(static_cast<std::size_t>(n), 1)));
    sweep(words.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
      const PackedWord& u = words[i];
      if (!(tits_product(one, u) == u && tits_product(u, one) == u))
        out.push_back("identity u=" + ws(u));
      if (!(tits_product(u, u) == u)) out.push_back("idempotent u=" + ws(u));
    });
    const std::size_t m = words.size();
    sweep(m * m, opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
      const PackedWord &u = words[i / m], &v = words[i % m];
      PackedWord p = tits_product(u, v);
      if (!(to_osp(p) == face_compose(to_osp(u), to_osp(v))))
        out.push_back("face transport u=" + ws(u) + " v=" + ws(v));
      if (!(tits_product(p, u) == p)) out.push_back("lrb u=" + ws(u) + " v=" + ws(v));
      if (u.max_letter() == static_cast<int>(u.size()) && !(p == u))
        out.push_back("chamber u=" + ws(u) + " v=" + ws(v));
    });
  }

  for (int n = 1; n <= Da; ++n) {
    const auto& words = table[static_cast<std::size_t>(n)];
    const std::size_t m = words.size();
    sweep(m * m * m, opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
      const PackedWord &u = words[i / (m * m)], &v = words[(i / m) % m], &w = words[i % m];
      if (!(tits_product(tits_product(u, v), w) == tits_product(u, tits_product(v, w))))
        out.push_back("assoc u=" + ws(u) + " v=" + ws(v) + " w=" + ws(w));
    });
  }

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_sylvester(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "sylvester";
  const int Dc = effective_degree("sylvester counts", 6, opt);
  const int Dw = std::min(opt.max_degree > 0 ? opt.max_degree : 5, opt.bound);
  rep.params = {{"count_degree", std::to_string(Dc)}, {"product_degree", std::to_string(Dw)}};

  for (int n = 1; n <= Dc; ++n) {
    std::size_t count = sylv_class_count(n, opt.bound);
    std::size_t trees = enumerate_trees(n, opt.bound).size();
    ++rep.checks;
    if (count != trees || (n <= 6 && count != kSchroeder[static_cast<std::size_t>(n) - 1]))
      rep.counterexamples.push_back("class count at degree " + std::to_string(n) + " is " +
                                    std::to_string(count));
  }

  auto table = packed_table(Dw, opt.bound);
  struct Item {
    const PackedWord *u, *v, *w;
  };
  std::vector<Item> items;
  for (int d = 2; d + 1 <= Dw; ++d) {
    std::map<Word, std::vector<const PackedWord*>> classes;
    for (const PackedWord& u : table[static_cast<std::size_t>(d)])
      classes[sylv_representative(u, opt.bound).word()].push_back(&u);
    for (const auto& [rep_w, members] : classes)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          for (int e = 1; d + e <= Dw; ++e)
            for (const PackedWord& w : table[static_cast<std::size_t>(e)])
              items.push_back({members[a], members[b], &w});
  }
  using Op = NCQSymElement (*)(const NCQSymElement&, const NCQSymElement&);
  const std::array<std::pair<const char*, Op>, 4> ops{{{"full", product_full},
                                                       {"prec", product_prec},
                                                       {"circ", product_circ},
                                                       {"succ", product_succ}}};
  sweep(items.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    NCQSymElement diff = NCQSymElement(*items[i].u) - NCQSymElement(*items[i].v);
    NCQSymElement mw(*items[i].w);
    for (const auto& [name, op] : ops) {
      if (!quotient_project(op(diff, mw), opt.bound).is_zero_elt())
        out.push_back(std::string("welldef ") + name + " right u=" + ws(*items[i].u) +
                      " v=" + ws(*items[i].v) + " w=" + ws(*items[i].w));
      if (!quotient_project(op(mw, diff), opt.bound).is_zero_elt())
        out.push_back(std::string("welldef ") + name + " left u=" + ws(*items[i].u) +
                      " v=" + ws(*items[i].v) + " w=" + ws(*items[i].w));
    }
  });

  for (int n = 1; n <= Dw; ++n) {
    std::size_t count = sylv_class_count(n, opt.bound);
    std::vector<NCQSymElement> proj_free;
    for (const NCQSymElement& b : generate_free(n, opt.bound))
      proj_free.push_back(quotient_project(b, opt.bound));
    std::vector<NCQSymElement> proj_all;
    for (const PackedWord& u : table[static_cast<std::size_t>(n)])
      proj_all.push_back(quotient_project(NCQSymElement(u), opt.bound));
    rep.checks += 2;
    if (rank_of_span(proj_free) != count)
      rep.counterexamples.push_back("quotient rank of the free image at degree " +
                                    std::to_string(n));
    if (rank_of_span(proj_all) != count)
      rep.counterexamples.push_back("quotient rank of NCQSym at degree " + std::to_string(n));
  }

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_parking(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "parking";
  const int D = effective_degree("parking", 5, opt);
  rep.params = {{"degree", std::to_string(D)}};
  auto table = packed_table(D, opt.bound);

  for (int n = 1; n <= D; ++n) {
    std::size_t total = 0;
    for (const PackedWord& u : table[static_cast<std::size_t>(n)])
      total += parking_fiber(u).size();
    std::size_t expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= static_cast<std::size_t>(n + 1);
    ++rep.checks;
    if (total != expect)
      rep.counterexamples.push_back("fiber total at degree " + std::to_string(n) + " is " +
                                    std::to_string(total));
  }

  std::vector<const PackedWord*> words;
  for (int d = 1; d <= D; ++d)
    for (const PackedWord& u : table[static_cast<std::size_t>(d)]) words.push_back(&u);
  sweep(words.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord& u = *words[i];
    std::vector<ParkingWord> fiber = parking_fiber(u);
    ParkingWord d = detass(u);
    if (fiber.empty() || !(d == fiber.back()))
      out.push_back("detass is not the fiber maximum at u=" + ws(u));
    if (!(pack(d.word()) == u)) out.push_back("detass leaves the fiber at u=" + ws(u));
    for (const ParkingWord& a : fiber)
      if (!(pack(a.word()) == u)) out.push_back("fiber member escapes at u=" + ws(u));
  });

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_qsym(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "qsym";
  const int D = effective_degree("qsym morphism", 5, opt);
  const int Dc = effective_degree("qsym algebra", 6, opt);
  rep.params = {{"morphism_degree", std::to_string(D)},
                {"algebra_degree", std::to_string(Dc)}};
  auto table = packed_table(D, opt.bound);

  PairSpace ps(table, D);
  sweep(ps.pairs.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    const PackedWord &u = *ps.pairs[i].first, &v = *ps.pairs[i].second;
    NCQSymElement x(u), y(v);
    QSymElement target = qsym_product(abelianize(x), abelianize(y));
    if (!(abelianize(product_full(x, y)) == target))
      out.push_back("morphism u=" + ws(u) + " v=" + ws(v));
    QSymElement split = abelianize(product_prec(x, y));
    split += abelianize(product_circ(x, y));
    split += abelianize(product_succ(x, y));
    if (!(split == target)) out.push_back("split image u=" + ws(u) + " v=" + ws(v));
  });

  for (int n = 1; n <= D; ++n) {
    std::vector<QSymElement> image;
    for (const PackedWord& u : table[static_cast<std::size_t>(n)])
      image.push_back(abelianize(NCQSymElement(u)));
    ++rep.checks;
    if (rank_of_span(image) != (std::size_t{1} << (n - 1)))
      rep.counterexamples.push_back("abelianized rank at degree " + std::to_string(n));
  }

  std::vector<std::vector<Composition>> comps(static_cast<std::size_t>(Dc) + 1);
  for (int d = 1; d <= Dc; ++d) comps[static_cast<std::size_t>(d)] = enumerate_compositions(d);
  std::vector<std::pair<const Composition*, const Composition*>> cpairs;
  std::vector<std::array<const Composition*, 3>> ctriples;
  for (int i = 1; i < Dc; ++i)
    for (int j = 1; i + j <= Dc; ++j)
      for (const Composition& a : comps[static_cast<std::size_t>(i)])
        for (const Composition& b : comps[static_cast<std::size_t>(j)]) {
          cpairs.emplace_back(&a, &b);
          for (int k = 1; i + j + k <= Dc; ++k)
            for (const Composition& c : comps[static_cast<std::size_t>(k)])
              ctriples.push_back({&a, &b, &c});
        }
  sweep(cpairs.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    QSymElement a(*cpairs[i].first), b(*cpairs[i].second);
    if (!(qsym_product(a, b) == qsym_product(b, a)))
      out.push_back("commutativity I=" + cpairs[i].first->str() + " J=" + cpairs[i].second->str());
  });
  sweep(ctriples.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
    QSymElement a(*ctriples[i][0]), b(*ctriples[i][1]), c(*ctriples[i][2]);
    if (!(qsym_product(qsym_product(a, b), c) == qsym_product(a, qsym_product(b, c))))
      out.push_back("associativity I=" + ctriples[i][0]->str() + " J=" + ctriples[i][1]->str() +
                    " K=" + ctriples[i][2]->str());
  });

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_freeness(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "freeness";
  const int D = effective_degree("freeness", 6, opt);
  rep.params = {{"degree", std::to_string(D)}};

  for (int n = 1; n <= D; ++n) {
    std::vector<NCQSymElement> basis = generate_free(n, opt.bound);
    std::vector<PlaneTree> trees = enumerate_trees(n, opt.bound);
    ++rep.checks;
    if (basis.size() != trees.size() || rank_of_span(basis) != basis.size() ||
        (n <= 6 && basis.size() != kSchroeder[static_cast<std::size_t>(n) - 1])) {
      rep.counterexamples.push_back("free dimension at degree " + std::to_string(n) + " is " +
                                    std::to_string(basis.size()));
      continue;
    }

    FreeSpan span(n, opt.bound);
    const auto& mm = span.mm();
    ++rep.checks;
    if (mm.size() != trees.size())
      rep.counterexamples.push_back("tree fibers missing at degree " + std::to_string(n));
    std::vector<NCQSymElement> mm_elts;
    for (const auto& [t, e] : mm) mm_elts.push_back(e);
    ++rep.checks;
    if (rank_of_span(mm_elts) != mm_elts.size())
      rep.counterexamples.push_back("MM basis dependent at degree " + std::to_string(n));
    sweep(mm.size(), opt, rep, [&](std::size_t i, std::vector<std::string>& out) {
      Membership r = membership(mm[i].second, span);
      if (!r.member || !(r.coords == Element<PlaneTree>(mm[i].first)))
        out.push_back("MM coordinates at degree " + std::to_string(n) + " tree " +
                      mm[i].first.str());
    });

    // One-shot exercise of the standalone entry point per degree.
    NCQSymElement corolla(PackedWord(Word(std::vector<int>(static_cast<std::size_t>(n), 1))));
    Membership direct = membership(corolla, n, opt.bound);
    ++rep.checks;
    if (!direct.member || direct.coords.term_count() != 1)
      rep.counterexamples.push_back("corolla membership at degree " + std::to_string(n));
  }

  finalize(rep, opt.limit, t0);
  return rep;
}

SuiteReport suite_dims(const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = "dims";
  const int D = effective_degree("dims", 6, opt);
  const int Dq = effective_degree("dims compositions", 7, opt);
  rep.params = {{"degree", std::to_string(D)},
                {"composition_degree", std::to_string(Dq)}};

  std::vector<unsigned long long> bell{1};
  for (int n = 1; n <= D; ++n) {
    unsigned long long total = 0, binom = 1;
    for (int k = 1; k <= n; ++k) {
      binom = binom * static_cast<unsigned long long>(n - k + 1) / static_cast<unsigned long long>(k);
      total += binom * bell[static_cast<std::size_t>(n - k)];
    }
    bell.push_back(total);
    ++rep.checks;
    if (enumerate_packed(n, opt.bound).size() != total)
      rep.counterexamples.push_back("packed count at degree " + std::to_string(n));
  }

  // (n+1) a(n) = (6n-3) a(n-1) - (n-2) a(n-2), a(0) = a(1) = 1.
  std::vector<long long> schroeder{1, 1};
  for (int n = 2; n <= D; ++n)
    schroeder.push_back(((6LL * n - 3) * schroeder[static_cast<std::size_t>(n - 1)] -
                         (n - 2) * schroeder[static_cast<std::size_t>(n - 2)]) /
                        (n + 1));
  for (int n = 1; n <= D; ++n) {
    ++rep.checks;
    if (enumerate_trees(n, opt.bound).size() !=
        static_cast<std::size_t>(schroeder[static_cast<std::size_t>(n)]))
      rep.counterexamples.push_back("tree count at degree " + std::to_string(n));
  }

  for (int n = 1; n <= Dq; ++n) {
    ++rep.checks;
    if (enumerate_compositions(n).size() != (std::size_t{1} << (n - 1)))
      rep.counterexamples.push_back("composition count at weight " + std::to_string(n));
  }

  finalize(rep, opt.limit, t0);
  return rep;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"axioms",  "oracle",  "hopf",
                                              "tits",    "sylvester", "parking",
                                              "qsym",    "freeness",  "dims"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "axioms") return suite_axioms(opt);
  if (name == "oracle") return suite_oracle(opt);
  if (name == "hopf") return suite_hopf(opt);
  if (name == "tits") return suite_tits(opt);
  if (name == "sylvester") return suite_sylvester(opt);
  if (name == "parking") return suite_parking(opt);
  if (name == "qsym") return suite_qsym(opt);
  if (name == "freeness") return suite_freeness(opt);
  if (name == "dims") return suite_dims(opt);
  throw ResourceLimitError("unknown verify suite: " + name);
}

std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& opt) {
  std::vector<SuiteReport> reports;
  if (name == "all") {
    for (const std::string& suite : verify_suite_names()) reports.push_back(run_suite(suite, opt));
  } else {
    reports.push_back(run_suite(name, opt));
  }
  return reports;
}

}  // namespace dendrikit
