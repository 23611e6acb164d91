#include "galcrem/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace galcrem {

int Report::exit_code() const {
  if (!failures.empty()) return exit_code::failure;
  if (undetermined) return exit_code::undetermined;
  return exit_code::ok;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render_human(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, v] : j.items()) {
    out << indent << key << ":";
    if (v.is_object()) {
      out << "\n";
      render_human(v, indent + "  ", out);
    } else if (v.is_array() && is_flat(v)) {
      out << " [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "]\n";
    } else if (v.is_array()) {
      out << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          render_human(e, indent + "    ", out);
        } else {
          out << indent << "  - " << e.dump() << "\n";
        }
      }
    } else {
      out << " " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render_report(const Report& r, ReportFormat f) {
  if (f == ReportFormat::json) return r.data.dump(2) + "\n";
  std::ostringstream out;
  render_human(r.data, "", out);
  if (!r.failures.empty()) {
    out << "FAILED:\n";
    for (const auto& s : r.failures) out << "  " << s << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- sections

namespace {

Json point_json(const ProjPoint& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < 3; ++i) a.push_back(p[i].to_string());
  return a;
}

Json matrix_json(const Matrix& m) { return m.to_strings(); }

Json map_json(const PlaneRationalMap& f) {
  auto s = f.to_strings();
  return Json::array({s[0], s[1], s[2]});
}

Json mobius_json(const MobiusOverBase& m) {
  auto s = m.to_strings();
  return {{"alpha", s[0]}, {"beta", s[1]}, {"gamma", s[2]}, {"delta", s[3]}};
}

Json json_or_null(const auto& opt, auto fn) { return opt ? fn(*opt) : Json(nullptr); }

Json verdict_json(GaloisVerdict v) {
  if (v == GaloisVerdict::galois) return true;
  if (v == GaloisVerdict::not_galois) return false;
  return "undetermined";
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o) : s_(s), o_(o) {
    r_.data["scenario"] = s.name;
    r_.data["field"] = field_name(s.field);
    r_.data["seed"] = o.seed;
  }

  template <class Fn>
  auto timed(const std::string& stage, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      timings_[stage] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
      auto v = fn();
      timings_[stage] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return v;
    }
  }

  void fail(const std::string& what) { r_.failures.push_back(what); }

  void curve() {
    timed("curve", [&] {
      const PlaneCurve& c = s_.curve;
      Json j;
      j["degree"] = c.degree();
      j["implicit"] = c.implicit().to_string();
      if (c.param()) {
        const auto& p = c.param()->components();
        j["param"] = Json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
      } else {
        j["param"] = nullptr;
      }
      j["implicit_source"] = s_.implicit_given ? "given" : "interpolation";
      r_.data["curve"] = j;
    });
  }

  bool projection() {
    if (!s_.point) {
      fail("no point given (use --point)");
      return false;
    }
    r_.data["point"] = point_json(*s_.point);
    timed("projection", [&] {
      model_ = projection_model(s_.curve, *s_.point);
      Json j;
      j["multiplicity"] = model_->multiplicity;
      if (s_.curve.param()) {
        unsigned mp = multiplicity_param(*s_.curve.param(), *s_.point, 4, o_.seed);
        j["multiplicity_param"] = mp;
        if (mp != model_->multiplicity)
          fail("multiplicity oracles disagree at P: implicit " + std::to_string(model_->multiplicity) + ", param " +
               std::to_string(mp));
        auto psi = projection_on_line(*s_.curve.param(), *s_.point);
        j["psi"] = Json::array({psi[0].to_string(), psi[1].to_string()});
      }
      j["ext_degree"] = model_->ext_degree;
      j["fiber_poly"] = model_->fiber_poly.to_string();
      r_.data["projection"] = j;
    });
    return true;
  }

  void galois() {
    timed("galois", [&] {
      const auto& phi = s_.curve.param();
      unsigned n = model_->ext_degree;
      std::optional<GaloisCertificate> deck, low;
      if (phi && !s_.generators.empty()) deck = deck_group_from_candidates(*phi, *s_.point, s_.generators, n);
      if (n <= 3) low = galois_test_low_degree(*model_, o_.budget);

      if (deck && low && deck->verdict != GaloisVerdict::undetermined && low->verdict != GaloisVerdict::undetermined &&
          deck->verdict != low->verdict)
        fail("Galois oracles disagree: deck group says " + to_string(deck->verdict) + ", " + low->method + " says " +
             to_string(low->verdict));
      if (deck && deck->verdict == GaloisVerdict::galois) {
        cert_ = *deck;
        if (low) {
          cert_.discriminant = low->discriminant;
          cert_.sigma = low->sigma;
          cert_.method = "deck+" + low->method;
        }
      } else if (low) {
        cert_ = *low;
        if (deck) {
          cert_.rejected = deck->rejected;
          cert_.detail += "; deck candidates: " + deck->detail;
        }
      } else if (deck) {
        cert_ = *deck;
      } else {
        cert_.degree = n;
        cert_.method = "none";
        cert_.detail = phi ? "degree > 3: supply candidate deck transformations as generators"
                           : "degree > 3 needs a parametrization and candidate generators";
      }

      r_.data["galois"] = verdict_json(cert_.verdict);
      r_.data["degree"] = cert_.degree;
      r_.data["method"] = cert_.method;
      Json gens = Json::array();
      for (const auto& g : cert_.generators) gens.push_back(matrix_json(g.matrix()));
      r_.data["generators"] = gens;
      Json rej = Json::array();
      for (const auto& g : cert_.rejected) rej.push_back(matrix_json(g.matrix()));
      r_.data["rejected_generators"] = rej;
      Json group = Json::array();
      for (const auto& e : cert_.elements) {
        Json je;
        je["label"] = e.label;
        je["on_line"] = json_or_null(e.on_line, [](const LineMobius& m) { return matrix_json(m.matrix()); });
        je["on_fiber"] = json_or_null(e.on_fiber, mobius_json);
        group.push_back(je);
      }
      r_.data["group"] = group;
      r_.data["discriminant"] = json_or_null(cert_.discriminant, [](const UPoly& d) { return Json(d.to_string()); });
      r_.data["galois_detail"] = cert_.detail;
      if (cert_.verdict == GaloisVerdict::undetermined && !s_.expected.galois) r_.undetermined = true;
    });
  }

  void extensions(const std::optional<std::string>& only = std::nullopt) {
    if (cert_.verdict != GaloisVerdict::galois) return;
    timed("extensions", [&] {
      ExtensionOptions eo;
      eo.degree_bound = o_.degree_bound;
      eo.seed = o_.seed;
      eo.stop = o_.stop;
      if (s_.chain && s_.curve.param()) {
        ReductionChain ch = *s_.chain;
        Parametrization phi = *s_.curve.param();
        eo.cremona_extender = [ch, phi](const LineMobius& g) { return chain_extension(ch, phi, g); };
      }
      ext_ = extension_verdict(*model_, cert_, eo);
      Json arr = Json::array();
      for (const auto& e : ext_->elements) {
        if (only && e.label != *only) continue;
        Json j;
        j["element"] = e.label;
        j["verdict"] = to_string(e.verdict);
        j["proven"] = e.proven;
        j["mobius_status"] = to_string(e.mobius_status);
        j["witness"] = {{"mobius", json_or_null(e.mobius, mobius_json)},
                        {"map", json_or_null(e.map, map_json)},
                        {"linear", json_or_null(e.linear, matrix_json)}};
        Json checks = Json::object();
        for (const auto& c : e.checks) {
          checks[c.name] = c.passed;
          if (!c.passed) fail("element " + e.label + ": check " + c.name + " failed");
        }
        j["checks"] = checks;
        j["notes"] = e.notes;
        if (e.verdict == ExtensionClass::undetermined && !s_.expected.elements.count(e.label)) r_.undetermined = true;
        arr.push_back(j);
      }
      r_.data["extensions"] = arr;
      if (!only) {
        r_.data["jonquieres"] = ext_->all_jonquieres;
        r_.data["cremona"] = ext_->all_extend;
        r_.data["extendable_elements"] = ext_->extendable;
      }
      r_.data["degree_bound"] = ext_->degree_bound;
      if (ext_->bound_certificate) {
        const auto& c = *ext_->bound_certificate;
        r_.data["multiplicity_bound"] = {{"m", c.m},
                                         {"status", to_string(c.status)},
                                         {"witness", json_or_null(c.witness, point_json)},
                                         {"detail", c.detail}};
      } else {
        r_.data["multiplicity_bound"] = {{"m", ext_->bound_m}, {"status", nullptr}};
      }
    });
  }

  void singular_points() {
    timed("singular_points", [&] {
      Json arr = Json::array();
      mults_.clear();
      for (const auto& p : s_.singular_points) {
        unsigned mi = multiplicity_implicit(s_.curve, p);
        Json j;
        j["point"] = point_json(p);
        j["implicit"] = mi;
        if (s_.curve.param()) {
          unsigned mp = multiplicity_param(*s_.curve.param(), p, 4, o_.seed);
          j["param"] = mp;
          if (mp != mi)
            fail("multiplicity oracles disagree at " + p.to_string() + ": implicit " + std::to_string(mi) +
                 ", param " + std::to_string(mp));
        }
        mults_.push_back(mi);
        arr.push_back(j);
      }
      r_.data["singular_points"] = arr;
    });
  }

  void pairing() {
    PairingReport pr = kodaira_pairing(s_.curve.degree(), mults_);
    r_.data["pairing"] = {{"value", pr.pairing},
                          {"coefficients", pr.coefficients},
                          {"line_equivalence_guaranteed", pr.line_equivalence_guaranteed}};
    r_.data["line_equivalence"] =
        s_.curve.param() ? Json(to_string(line_equivalence_decision(s_.curve))) : Json("unknown");
  }

  void chain(bool build_if_missing) {
    if (!s_.chain && !build_if_missing) return;
    timed("chain", [&] {
      ReductionChain ch;
      std::string source = "given";
      if (s_.chain) {
        ch = *s_.chain;
      } else {
        std::vector<ProjPoint> hints = s_.singular_points;
        if (s_.point) hints.push_back(*s_.point);
        ch = greedy_reduction(s_.curve, hints);
        source = "greedy";
      }
      ChainReplay rp = replay(ch, s_.curve);
      Json steps = Json::array();
      for (std::size_t i = 0; i < ch.steps.size(); ++i) {
        const StepRecord& rec = rp.records[i];
        Json j;
        j["kind"] = rec.kind;
        if (const auto* lin = std::get_if<LinearStep>(&ch.steps[i])) {
          j["matrix"] = matrix_json(lin->matrix);
        } else {
          Json pts = Json::array();
          for (const auto& p : std::get<QuadraticStep>(ch.steps[i]).points) pts.push_back(point_json(p));
          j["points"] = pts;
          j["multiplicities"] = rec.multiplicities;
        }
        j["degree_before"] = rec.degree_before;
        j["degree_after"] = rec.degree_after;
        j["degree_formula_holds"] = rec.degree_formula_holds;
        if (!rec.degree_formula_holds) fail("chain step " + std::to_string(i) + ": degree formula fails");
        steps.push_back(j);
      }
      Json curves = Json::array();
      for (const auto& c : rp.curves) curves.push_back(c.implicit().to_string());
      r_.data["chain"] = {{"source", source}, {"steps", steps}, {"curves", curves}, {"end_degree", rp.end().degree()}};
    });
  }

  const GroupElement* element(const std::string& label) const {
    for (const auto& e : cert_.elements)
      if (e.label == label) return &e;
    return nullptr;
  }

  Json map_checks(const PlaneRationalMap& J, const std::string& label, bool invariant, const std::string& what) {
    const MultiPoly& F = s_.curve.implicit();
    Json j;
    j["element"] = label;
    j["map"] = map_json(J);
    Json checks = Json::object();
    auto check = [&](const std::string& name, bool ok) {
      checks[name] = ok;
      if (!ok) fail(what + ": check " + name + " failed");
    };
    if (s_.point) {
      JonquieresResult jr = jonquieres_decompose(J, *s_.point);
      j["jonquieres"] = to_string(jr.decision);
      check("pencil_preserved", pencil_preserved(J, *s_.point));
    }
    check("curve_preserved", preserves_curve(F, J));
    if (invariant) check("invariant", J.pull_back(F) == F.embed(plane_vars()));
    const GroupElement* g = element(label);
    if (!g || !g->on_line) {
      fail(what + ": element " + label + " is not a verified deck transformation");
    } else if (s_.curve.param()) {
      check("restricts_to_element", restricts_to(J, *s_.curve.param(), *g->on_line));
    }
    j["checks"] = checks;
    return j;
  }

  void known_maps() {
    if (s_.known_maps.empty()) return;
    timed("known_maps", [&] {
      Json arr = Json::array();
      for (std::size_t i = 0; i < s_.known_maps.size(); ++i) {
        const KnownMap& km = s_.known_maps[i];
        arr.push_back(map_checks(km.map, km.element, km.expect_invariant, "known map " + std::to_string(i)));
      }
      r_.data["known_maps"] = arr;
    });
  }

  void user_map(const std::string& label) {
    if (!s_.map) return;
    r_.data["map"] = map_checks(*s_.map, label, false, "given map");
  }

  void expectations() {
    const Expectations& e = s_.expected;
    if (e.empty()) return;
    std::vector<std::string> unmet;
    auto mismatch = [&](const std::string& what, const std::string& want, const std::string& got) {
      unmet.push_back(what + ": expected " + want + ", got " + got);
    };
    if (e.degree && (!model_ || model_->ext_degree != *e.degree))
      mismatch("degree", std::to_string(*e.degree), model_ ? std::to_string(model_->ext_degree) : "none");
    if (e.galois && cert_.verdict != *e.galois) mismatch("galois", to_string(*e.galois), to_string(cert_.verdict));
    auto find = [&](const std::string& label) -> const ElementExtension* {
      if (!ext_) return nullptr;
      for (const auto& x : ext_->elements)
        if (x.label == label) return &x;
      return nullptr;
    };
    for (const auto& [label, cls] : e.elements) {
      const ElementExtension* x = find(label);
      if (!x || x->verdict != cls) mismatch("element " + label, to_string(cls), x ? to_string(x->verdict) : "missing");
    }
    for (const auto& [label, pr] : e.proven) {
      const ElementExtension* x = find(label);
      if (!x || x->proven != pr)
        mismatch("proven " + label, pr ? "true" : "false", x ? (x->proven ? "true" : "false") : "missing");
    }
    auto flag = [&](const std::string& what, std::optional<bool> want, std::optional<bool> got) {
      if (want && got != want) mismatch(what, *want ? "true" : "false", got ? (*got ? "true" : "false") : "missing");
    };
    flag("jonquieres", e.jonquieres, ext_ ? std::optional<bool>(ext_->all_jonquieres) : std::nullopt);
    flag("cremona", e.cremona, ext_ ? std::optional<bool>(ext_->all_extend) : std::nullopt);
    if (e.extendable && (!ext_ || ext_->extendable != *e.extendable)) {
      Json got = ext_ ? Json(ext_->extendable) : Json(nullptr);
      mismatch("extendable_elements", Json(*e.extendable).dump(), got.dump());
    }
    for (const auto& u : unmet) fail(u);
    r_.data["expectations"] = {{"met", unmet.empty()}, {"failures", unmet}};
  }

  Report finish() {
    if (o_.timings) {
      Json t = Json::object();
      for (const auto& [k, v] : timings_) t[k] = v;
      r_.data["timings"] = t;
    }
    return std::move(r_);
  }

  const GaloisCertificate& cert() const { return cert_; }

 private:
  const Scenario& s_;
  const RunOptions& o_;
  Report r_;
  std::optional<ProjectionModel> model_;
  GaloisCertificate cert_;
  std::optional<ExtensionReport> ext_;
  std::vector<unsigned> mults_;
  std::map<std::string, double> timings_;
};

}  // namespace

Report curve_info(const Scenario& s, const RunOptions& o) {
  Runner run(s, o);
  run.curve();
  run.singular_points();
  run.pairing();
  return run.finish();
}

Report galois_test(const Scenario& s, const RunOptions& o) {
  Runner run(s, o);
  run.curve();
  if (run.projection()) run.galois();
  return run.finish();
}

Report galois_extend(const Scenario& s, const RunOptions& o) {
  Runner run(s, o);
  run.curve();
  if (!run.projection()) return run.finish();
  run.galois();
  std::size_t idx = o.generator.value_or(0);
  std::optional<std::string> label;
  const auto& elems = run.cert().elements;
  if (idx < s.generators.size()) {
    for (const auto& e : elems)
      if (e.on_line && *e.on_line == s.generators[idx]) label = e.label;
  } else if (s.generators.empty() && idx + 1 < elems.size()) {
    // without generators the index runs over the non-identity elements
    label = elems[idx + 1].label;
  }
  if (!label) {
    run.fail("generator " + std::to_string(idx) + " is not an element of the verified group");
    return run.finish();
  }
  run.extensions(label);
  run.user_map(*label);
  return run.finish();
}

Report cremona_reduce(const Scenario& s, const RunOptions& o) {
  Runner run(s, o);
  run.curve();
  run.singular_points();
  run.pairing();
  run.chain(true);
  return run.finish();
}

Report verify_scenario(const Scenario& s, const RunOptions& o) {
  Runner run(s, o);
  run.curve();
  if (run.projection()) {
    run.galois();
    run.extensions();
  }
  run.singular_points();
  run.pairing();
  run.chain(false);
  run.known_maps();
  run.user_map(s.map ? "sigma" : "");
  run.expectations();
  return run.finish();
}

}  // namespace galcrem
