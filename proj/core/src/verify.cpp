#include "alcove/verify.hpp"

#include <algorithm>
#include <random>

namespace alcove {

namespace {

std::string wall_str(const Reflection& s, long long p) {
  return "s[" + std::to_string(s.root_index) + "," + std::to_string(s.n * p) + "]";
}

// weights of the block of 0 inside the box, regular only
struct BlockScan {
  std::vector<Weight> regular;          // every regular box weight
  std::vector<Weight> zero_block;       // regular and linked to 0
  std::vector<AffineElt> zero_witness;  // w with w . 0 = the weight
};

BlockScan scan_box(const RootSystem& rs, long long p, long long radius) {
  BlockScan out;
  Weight zero = zero_weight(rs);
  for (const Weight& x : box_weights(rs, radius)) {
    if (!is_regular(rs, x, p)) continue;
    out.regular.push_back(x);
    ReduceResult rr = reduce_to_C(rs, x, p);
    if (rr.rep == zero) {
      out.zero_block.push_back(x);
      out.zero_witness.push_back(rr.v);
    }
  }
  return out;
}

std::string levi_str(const std::vector<int>& I) {
  std::string s = "I={";
  for (size_t i = 0; i < I.size(); i++) s += (i ? "," : "") + std::to_string(I[i] + 1);
  return s + "}";
}

} // namespace

VerifyReport verify_suite(const VerifyConfig& cfg) {
  VerifyReport report;
  report.seed = cfg.seed;
  auto rs = std::make_shared<const RootSystem>(parse_root_system(cfg.type_spec));
  const long long p = cfg.p;

  if (p < rs->coxeter_number) {
    CheckResult r;
    r.name = "PTooSmall";
    r.failures.push_back("p = " + std::to_string(p) + " is below the Coxeter number " +
                         std::to_string(rs->coxeter_number) + "; no regular block exists");
    report.checks.push_back(std::move(r));
    return report;
  }

  long long radius = cfg.box_radius == 0 ? 3 * p : cfg.box_radius;
  if (radius < p) fail(errc::bound_exceeded, "box radius must be at least p");

  std::vector<std::vector<int>> subsets = cfg.levi_subsets;
  if (subsets.empty()) {
    for (int mask = 0; mask < (1 << rs->rank); mask++) {
      std::vector<int> I;
      for (int i = 0; i < rs->rank; i++)
        if (mask & (1 << i)) I.push_back(i);
      subsets.push_back(std::move(I));
    }
  }

  std::mt19937_64 rng(cfg.seed);
  report.checks.push_back({"seed", (long long)cfg.seed, {}});

  std::vector<Weight> box = box_weights(*rs, radius);
  BlockScan scan = scan_box(*rs, p, radius);
  std::vector<Reflection> walls = simple_reflections_Sp(*rs, p);
  Weight zero = zero_weight(*rs);

  std::vector<LeviDatum> levis;
  for (const auto& I : subsets) levis.push_back(make_levi(rs, I, p));

  // -- stabilizer-orbit counts ------------------------------------------------
  {
    CheckResult r{"stab-size", 0, {}};
    for (const LeviDatum& L : levis) {
      for (const Weight& lam : box) {
        long long brute = brute_coset_orbit_count(lam, L);
        // trichotomy from the wall structure of lam, where it applies
        int singular = -1, nsing = 0;
        for (int k = 0; k < (int)rs->positive_roots.size(); k++)
          if (floor_mod(rho_pairing(*rs, lam, k), Int(p)).is_zero()) {
            singular = k;
            nsing++;
          }
        if (nsing <= 1) {
          long long expect = L.order_WI;
          if (nsing == 1 && L.in_levi_span(singular)) expect = L.order_WI / 2;
          r.instances++;
          if (brute != expect)
            r.failures.push_back(levi_str(L.I) + " (" + lam.str() + "): closure " +
                                 std::to_string(brute) + " vs formula " +
                                 std::to_string(expect));
        }
        // the library count must match the raw closure for every weight
        r.instances++;
        long long lib = N_I(lam, L);
        if (brute != lib)
          r.failures.push_back(levi_str(L.I) + " (" + lam.str() + "): closure " +
                               std::to_string(brute) + " vs N_I " + std::to_string(lib));
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- regularity across the wall vs the conjugate criterion -------------------
  {
    CheckResult r{"refl-equivalence", 0, {}};
    for (const LeviDatum& L : levis) {
      for (const Reflection& s : walls) {
        WallSetup setup = choose_mu(s, *rs, p);
        for (size_t i = 0; i < scan.zero_block.size(); i++) {
          if (!in_CI(*rs, L, scan.zero_block[i])) continue;
          r.instances++;
          try {
            refl_stays_regular(scan.zero_witness[i], setup, L);
          } catch (const calc_error& e) {
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + " (" +
                                 scan.zero_block[i].str() + "): " + e.what());
          }
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- crossing a facet moves d by exactly one ---------------------------------
  {
    CheckResult r{"refl-ord-step", 0, {}};
    for (const Weight& x : scan.regular) {
      Int dx = d_value(*rs, x, p);
      for (const WallDatum& w : walls_of_alcove(*rs, x, p)) {
        r.instances++;
        Weight y = dot_action(*rs, reflection_elt(*rs, w.root_index, w.n, p), x);
        Int dy = d_value(*rs, y, p);
        Int expect = w.side == WallSide::down ? dx - Int(1) : dx + Int(1);
        if (dy != expect)
          r.failures.push_back("(" + x.str() + ") wall " +
                               std::to_string(w.root_index) + ":" + std::to_string(w.n) +
                               ": d " + dx.str() + " -> " + dy.str());
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- off the wall then back on doubles ---------------------------------------
  {
    CheckResult r{"round-trip-2id", 0, {}};
    for (const LeviDatum& L : levis) {
      for (const Reflection& s : walls) {
        WallSetup setup = choose_mu(s, *rs, p);
        for (const Weight& xi : box) {
          if (!(orbit_rep(xi, L).rep == xi)) continue;
          ReduceResult rr = reduce_by_walls(*rs, p, xi, walls);
          if (!(rr.rep == setup.mu)) continue;
          r.instances++;
          GVector v;
          v.basis = Basis::zbar;
          v.block = orbit_rep(setup.mu, L).rep;
          v.add(xi, Rat(Int(1)));
          GVector back = translate(translate(v, {Direction::off_wall, setup, L}),
                                   {Direction::onto_wall, setup, L});
          if (!(back == scale(v, Rat(Int(2)))))
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + " (" + xi.str() +
                                 "): round trip is not twice the identity");
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- the two bases see the same translation ----------------------------------
  {
    CheckResult r{"basis-commutation", 0, {}};
    for (const LeviDatum& L : levis) {
      for (const Reflection& s : walls) {
        WallSetup setup = choose_mu(s, *rs, p);
        TransSpec onto{Direction::onto_wall, setup, L};
        TransSpec off{Direction::off_wall, setup, L};
        for (const Weight& nu : scan.zero_block) {
          if (!(orbit_rep(nu, L).rep == nu)) continue;
          r.instances++;
          GVector v;
          v.basis = Basis::zbar;
          v.block = orbit_rep(zero, L).rep;
          v.add(nu, Rat(Int(1)));
          GVector a = convert_basis(translate(v, onto), Basis::nabla, L);
          GVector b = translate_standard(convert_basis(v, Basis::nabla, L), onto);
          if (!(a == b))
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + " onto (" +
                                 nu.str() + ")");
          GVector th = theta_s(v, setup, L);
          for (const auto& [label, coeff] : th.terms)
            if (coeff.sign() < 0)
              r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + " theta (" +
                                   nu.str() + "): negative coefficient");
        }
        for (const Weight& xi : box) {
          if (!(orbit_rep(xi, L).rep == xi)) continue;
          ReduceResult rr = reduce_by_walls(*rs, p, xi, walls);
          if (!(rr.rep == setup.mu)) continue;
          r.instances++;
          GVector v;
          v.basis = Basis::zbar;
          v.block = orbit_rep(setup.mu, L).rep;
          v.add(xi, Rat(Int(1)));
          GVector a = convert_basis(translate(v, off), Basis::nabla, L);
          GVector b = translate_standard(convert_basis(v, Basis::nabla, L), off);
          if (!(a == b))
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + " off (" + xi.str() +
                                 ")");
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- descent words and their certificates ------------------------------------
  std::vector<std::vector<Weight>> domexp_targets(levis.size());
  {
    CheckResult r{"domexp-certificates", 0, {}};
    for (size_t li = 0; li < levis.size(); li++) {
      const LeviDatum& L = levis[li];
      for (const Weight& nu : scan.regular) {
        if (!is_dominant(*rs, nu)) continue;
        if (!(orbit_rep(nu, L).rep == nu)) continue;
        Int d = d_value(*rs, nu, p);
        if (d > Int(cfg.max_d)) continue;
        r.instances++;
        try {
          ReducedWord word = domexp_word(nu, L);
          recheck_word(word, L);
          if ((Int((long long)word.letters.size())) != d - d_value(*rs, word.base, p))
            r.failures.push_back(levi_str(L.I) + " (" + nu.str() + "): word length " +
                                 std::to_string(word.letters.size()) + " vs depth " + d.str());
          domexp_targets[li].push_back(nu);
        } catch (const calc_error& e) {
          r.failures.push_back(levi_str(L.I) + " (" + nu.str() + "): " + e.what());
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- triangularity of the wall-crossing product ------------------------------
  {
    CheckResult r{"tilt-summand", 0, {}};
    for (size_t li = 0; li < levis.size(); li++) {
      const LeviDatum& L = levis[li];
      for (const Weight& nu : domexp_targets[li]) {
        r.instances++;
        try {
          ReducedWord word = domexp_word(nu, L);
          tilt_summand_check(word, L);
        } catch (const calc_error& e) {
          r.failures.push_back(levi_str(L.I) + " (" + nu.str() + "): " + e.what());
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- section counts move like characters -------------------------------------
  {
    CheckResult r{"section-squares", 0, {}};
    for (const LeviDatum& L : levis) {
      // regular-block and wall-block label pools
      std::vector<Weight> reg_labels;
      for (const Weight& nu : scan.zero_block)
        if (orbit_rep(nu, L).rep == nu) reg_labels.push_back(nu);
      for (const Reflection& s : walls) {
        WallSetup setup = choose_mu(s, *rs, p);
        std::vector<Weight> wall_labels;
        for (const Weight& xi : box) {
          if (!(orbit_rep(xi, L).rep == xi)) continue;
          if (reduce_by_walls(*rs, p, xi, walls).rep == setup.mu) wall_labels.push_back(xi);
        }
        if (reg_labels.empty() || wall_labels.empty()) continue;
        long long rounds = std::min<long long>(cfg.sample_cap, 200);
        for (long long t = 0; t < rounds; t++) {
          r.instances++;
          // random nonnegative NABLA character over the regular labels
          GVector M;
          M.basis = Basis::nabla;
          M.block = orbit_rep(zero, L).rep;
          int picks = 1 + (int)(rng() % 3);
          for (int q = 0; q < picks; q++)
            M.add(reg_labels[rng() % reg_labels.size()], Rat(Int((long long)(rng() % 3))));
          SectionSkeleton lhs =
              onto_wall_transform(skeleton_from_char(M, SectionKind::deltabar, L), setup, L);
          GVector tr = translate(convert_basis(M, Basis::zbar, L),
                                 {Direction::onto_wall, setup, L});
          SectionSkeleton rhs = skeleton_from_char(tr, SectionKind::deltabar, L);
          if (!(lhs == rhs))
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + ": onto square");

          // and a wall character back down
          GVector W;
          W.basis = Basis::nabla;
          W.block = orbit_rep(setup.mu, L).rep;
          for (int q = 0; q < picks; q++)
            W.add(wall_labels[rng() % wall_labels.size()], Rat(Int((long long)(rng() % 3))));
          SectionSkeleton lhs2 =
              off_wall_transform(skeleton_from_char(W, SectionKind::deltabar, L), setup, L);
          GVector tr2 = translate(convert_basis(W, Basis::zbar, L),
                                  {Direction::off_wall, setup, L});
          SectionSkeleton rhs2 = skeleton_from_char(tr2, SectionKind::deltabar, L);
          if (!(lhs2 == rhs2))
            r.failures.push_back(levi_str(L.I) + " " + wall_str(s, p) + ": off square");
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- the wall order propagates up --------------------------------------------
  {
    CheckResult r{"prec-ml", 0, {}};
    for (const Reflection& s : walls) {
      WallSetup setup = choose_mu(s, *rs, p);
      AffineElt s_elt = reflection_elt(*rs, s, p);
      const size_t n = scan.zero_block.size();
      std::vector<std::pair<size_t, size_t>> pairs;
      if ((long long)(n * n) <= cfg.sample_cap) {
        for (size_t i = 0; i < n; i++)
          for (size_t j = 0; j < n; j++) pairs.push_back({i, j});
      } else {
        for (long long t = 0; t < cfg.sample_cap; t++)
          pairs.push_back({(size_t)(rng() % n), (size_t)(rng() % n)});
      }
      for (auto [i, j] : pairs) {
        const AffineElt& w = scan.zero_witness[i];
        const Weight& wl = scan.zero_block[i];
        Weight wsl = dot_action(*rs, compose(*rs, w, s_elt), zero);
        if (!(uparrow_leq(*rs, wl, wsl, p) && !(wl == wsl))) continue; // need w.0 < ws.0
        const AffineElt& v = scan.zero_witness[j];
        const Weight& vl = scan.zero_block[j];
        Weight wm = dot_action(*rs, w, setup.mu);
        Weight vm = dot_action(*rs, v, setup.mu);
        if (!(uparrow_leq(*rs, wm, vm, p) && !(wm == vm))) continue; // need w.mu < v.mu
        r.instances++;
        if (!(uparrow_leq(*rs, wl, vl, p) && !(wl == vl)))
          r.failures.push_back(wall_str(s, p) + ": (" + wl.str() + ") vs (" + vl.str() +
                               ") fails the lambda comparison");
        Weight vsl = dot_action(*rs, compose(*rs, v, s_elt), zero);
        if (!(uparrow_leq(*rs, wl, vsl, p) && !(wl == vsl)))
          r.failures.push_back(wall_str(s, p) + ": (" + wl.str() + ") vs s-image of (" +
                               vl.str() + ") fails the crossed comparison");
      }
    }
    report.checks.push_back(std::move(r));
  }

  // -- the arrow order against forward closure ----------------------------------
  {
    CheckResult r{"uparrow-oracle", 0, {}};
    const size_t n = box.size();
    std::vector<std::pair<size_t, size_t>> pairs;
    if ((long long)(n * n) <= cfg.sample_cap) {
      for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) pairs.push_back({i, j});
    } else {
      for (long long t = 0; t < cfg.sample_cap; t++)
        pairs.push_back({(size_t)(rng() % n), (size_t)(rng() % n)});
    }
    for (auto [i, j] : pairs) {
      r.instances++;
      bool fast = uparrow_leq(*rs, box[i], box[j], p);
      bool slow = brute_uparrow(*rs, box[i], box[j], p);
      if (fast != slow)
        r.failures.push_back("(" + box[i].str() + ") vs (" + box[j].str() + "): " +
                             (fast ? "order says yes, closure says no"
                                   : "order says no, closure says yes"));
    }
    report.checks.push_back(std::move(r));
  }

  return report;
}

} // namespace alcove
