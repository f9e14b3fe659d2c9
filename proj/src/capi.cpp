#include "sl2real/sl2real.h"

#include "catalog.hpp"
#include "jsonio.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace sl2real;

struct slr_group {
  std::shared_ptr<const GroupContext> ctx;
};

struct slr_embedding {
  Embedding emb;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool pretty_env() {
  const char* v = std::getenv("SL2_JSON_PRETTY");
  return v && *v && std::strcmp(v, "0") != 0;
}

// Runs the body, translating exceptions into statuses + last_error.
template <typename Fn>
slr_status guarded(slr_status on_invalid, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::parse_error& e) {
    g_last_error = e.what();
    return SLR_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return on_invalid;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SLR_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SLR_ERR_INTERNAL;
  }
}

Json h1_to_json(const GroupContext& ctx, SigmaKind sigma) {
  Json classes = Json::array();
  for (const auto& c : h1_table(sigma, ctx.group())) {
    classes.push_back(Json{{"name", c.label},
                           {"representative", mat_to_json(c.representative)}});
  }
  return Json{{"label", ctx.label().str()},
              {"sigma", sigma_name(sigma)},
              {"classes", classes}};
}

Json structure_check_to_json(const GroupContext& ctx, SigmaKind sigma,
                             const Mat2& t) {
  StructureValidity v = validate_structure(sigma, ctx.group(), t);
  Json out{{"label", ctx.label().str()},
           {"sigma", sigma_name(sigma)},
           {"twist", mat_to_json(t)},
           {"valid", v.ok}};
  if (!v.ok) {
    out["reason"] = v.reason;
    out["condition_failed"] = v.failed_condition;
  }
  if (v.ok && sigma == SigmaKind::Compact) {
    bool nonempty = sigma_c_locus_nonempty(ctx.group(), t);
    out["sigma_c_locus"] =
        nonempty ? "SU2/" + ctx.label().str() : std::string("empty");
  }
  return out;
}

Json diagram_to_json(const GroupContext& ctx) {
  const Diagram& d = ctx.diagram();
  Json special = Json::array();
  for (const auto& s : d.special) {
    special.push_back(Json{{"rep", point_to_json(s.orbit.representative)},
                           {"size", s.orbit.size()},
                           {"b", rational_str(s.b)}});
  }
  return Json{{"label", d.label.str()},
              {"generic",
               Json{{"size", d.generic_size}, {"b", rational_str(d.generic_b)}}},
              {"special", special}};
}

Json report_to_json(const ValidityReport& rep) {
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    Json jv{{"condition", v.condition}, {"message", v.message}};
    if (v.spoke) jv["spoke"] = point_to_json(*v.spoke);
    if (v.r) jv["r"] = rational_str(*v.r);
    violations.push_back(jv);
  }
  return Json{{"valid", rep.valid}, {"violations", violations}};
}

Json table_to_json(const TableReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json jr{{"name", r.name},
            {"expected", r.expected},
            {"computed", r.computed},
            {"match", r.match}};
    if (!r.note.empty()) jr["note"] = r.note;
    rows.push_back(jr);
  }
  return Json{{"which", rep.which},
              {"rows", rows},
              {"all_match", rep.all_match()}};
}

}  // namespace

extern "C" {

void slr_string_free(char* s) { std::free(s); }

const char* slr_status_name(slr_status st) {
  switch (st) {
    case SLR_OK:
      return "ok";
    case SLR_ERR_NULL_ARG:
      return "null argument";
    case SLR_ERR_BAD_LABEL:
      return "bad subgroup label";
    case SLR_ERR_BAD_SIGMA:
      return "bad real group structure";
    case SLR_ERR_BAD_MATRIX:
      return "bad matrix";
    case SLR_ERR_PARSE:
      return "parse error";
    case SLR_ERR_DOMAIN:
      return "domain error";
    default:
      return "internal error";
  }
}

const char* slr_last_error(void) { return g_last_error.c_str(); }

slr_status slr_group_create(const char* label, slr_group** out) {
  if (!label || !out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_BAD_LABEL, [&]() {
    auto ctx = GroupContext::get(GroupLabel::parse(label));
    *out = new slr_group{std::move(ctx)};
    return SLR_OK;
  });
}

void slr_group_free(slr_group* g) { delete g; }

slr_status slr_group_order(const slr_group* g, int* out) {
  if (!g || !out) return SLR_ERR_NULL_ARG;
  *out = static_cast<int>(g->ctx->group().order());
  return SLR_OK;
}

slr_status slr_group_info_json(const slr_group* g, char** json_out) {
  if (!g || !json_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_INTERNAL, [&]() {
    const GroupContext& ctx = *g->ctx;
    Json gens = Json::array();
    for (const auto& m : ctx.group().generators()) gens.push_back(mat_to_json(m));
    const NormalizerQuotient& q = ctx.quotient();
    Json norm{{"kind", quotient_kind_name(q.kind)}};
    if (q.kind == QuotientKind::Finite)
      norm["quotient_order"] = q.representatives.size();
    else
      norm["quotient_order"] = nullptr;
    Json out{{"label", ctx.label().str()},
             {"order", ctx.group().order()},
             {"generators", gens},
             {"normalizer", norm}};
    *json_out = dup_string(dump_json(out, pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_diagram_json(const slr_group* g, char** json_out) {
  if (!g || !json_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_INTERNAL, [&]() {
    *json_out = dup_string(dump_json(diagram_to_json(*g->ctx), pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_diagram_ascii(const slr_group* g, char** text_out) {
  if (!g || !text_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_INTERNAL, [&]() {
    *text_out = dup_string(diagram_ascii(g->ctx->diagram()));
    return SLR_OK;
  });
}

slr_status slr_h1_json(const slr_group* g, const char* sigma, char** json_out) {
  if (!g || !sigma || !json_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_BAD_SIGMA, [&]() {
    SigmaKind s = sigma_parse(sigma);
    *json_out = dup_string(dump_json(h1_to_json(*g->ctx, s), pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_structure_check_json(const slr_group* g, const char* sigma,
                                    const char* twist, char** json_out) {
  if (!g || !sigma || !twist || !json_out) return SLR_ERR_NULL_ARG;
  SigmaKind s;
  slr_status st = guarded(SLR_ERR_BAD_SIGMA, [&]() {
    s = sigma_parse(sigma);
    return SLR_OK;
  });
  if (st != SLR_OK) return st;
  Mat2 t;
  st = guarded(SLR_ERR_BAD_MATRIX, [&]() {
    t = matrix_from_arg(twist);
    return SLR_OK;
  });
  if (st != SLR_OK) return st == SLR_ERR_PARSE ? SLR_ERR_BAD_MATRIX : st;
  return guarded(SLR_ERR_INTERNAL, [&]() {
    *json_out =
        dup_string(dump_json(structure_check_to_json(*g->ctx, s, t), pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_embedding_parse(const char* json, slr_embedding** out) {
  if (!json || !out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_PARSE, [&]() {
    Json j = Json::parse(json);
    *out = new slr_embedding{embedding_from_json(j)};
    return SLR_OK;
  });
}

void slr_embedding_free(slr_embedding* e) { delete e; }

slr_status slr_embedding_group_label(const slr_embedding* e, char** label_out) {
  if (!e || !label_out) return SLR_ERR_NULL_ARG;
  *label_out = dup_string(e->emb.group.str());
  return SLR_OK;
}

slr_status slr_embedding_check_json(const slr_embedding* e, char** json_out) {
  if (!e || !json_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_DOMAIN, [&]() {
    auto ctx = GroupContext::get(e->emb.group);
    EmbeddingAnalyzer an(ctx, e->emb);
    ValidityReport rep = an.validate();
    Json out = report_to_json(rep);
    out["group"] = e->emb.group.str();
    if (rep.valid) {
      out["complete"] = an.is_complete();
      out["quasiprojective"] = an.is_quasiprojective();
    } else {
      out["complete"] = nullptr;
      out["quasiprojective"] = nullptr;
    }
    *json_out = dup_string(dump_json(out, pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_extend_json(const slr_embedding* e, const char* sigma,
                           const char* twist, char** json_out) {
  if (!e || !sigma || !twist || !json_out) return SLR_ERR_NULL_ARG;
  SigmaKind s;
  slr_status st = guarded(SLR_ERR_BAD_SIGMA, [&]() {
    s = sigma_parse(sigma);
    return SLR_OK;
  });
  if (st != SLR_OK) return st;
  Mat2 t;
  st = guarded(SLR_ERR_BAD_MATRIX, [&]() {
    t = matrix_from_arg(twist);
    return SLR_OK;
  });
  if (st != SLR_OK) return st == SLR_ERR_PARSE ? SLR_ERR_BAD_MATRIX : st;
  return guarded(SLR_ERR_DOMAIN, [&]() {
    auto ctx = GroupContext::get(e->emb.group);
    Json out{{"group", e->emb.group.str()},
             {"sigma", sigma_name(s)},
             {"twist", mat_to_json(t)}};
    StructureValidity sv = validate_structure(s, ctx->group(), t);
    if (!sv.ok) {
      out["structure_valid"] = false;
      out["reason"] = sv.reason;
      *json_out = dup_string(dump_json(out, pretty_env()));
      return SLR_OK;
    }
    EmbeddingAnalyzer an(ctx, e->emb);
    ValidityReport rep = an.validate();
    if (!rep.valid) {
      out["structure_valid"] = true;
      out["embedding_valid"] = false;
      out["report"] = report_to_json(rep);
      *json_out = dup_string(dump_json(out, pretty_env()));
      return SLR_OK;
    }
    GammaAction act{s, ctx, t};
    ExtensionVerdict v = check_extension(act, e->emb);
    out["structure_valid"] = true;
    out["embedding_valid"] = true;
    out["outcome"] = extension_outcome_name(v.outcome);
    Json w = Json::array();
    for (const auto& s2 : v.witnesses) w.push_back(s2);
    out["witnesses"] = w;
    *json_out = dup_string(dump_json(out, pretty_env()));
    return SLR_OK;
  });
}

slr_status slr_reproduce_json(const char* which, int* all_match,
                              char** json_out) {
  if (!which || !all_match || !json_out) return SLR_ERR_NULL_ARG;
  return guarded(SLR_ERR_DOMAIN, [&]() {
    std::string w = which;
    std::vector<TableReport> reports;
    if (w == "h1") {
      reports.push_back(reproduce_h1_table());
    } else if (w == "extensions") {
      reports.push_back(reproduce_extension_table());
    } else if (w == "structures") {
      reports.push_back(reproduce_structure_table());
    } else if (w == "all") {
      reports.push_back(reproduce_h1_table());
      reports.push_back(reproduce_extension_table());
      reports.push_back(reproduce_structure_table());
    } else {
      throw std::invalid_argument("unknown table '" + w +
                                  "' (h1, extensions, structures, all)");
    }
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
      ok = ok && r.all_match();
      arr.push_back(table_to_json(r));
    }
    *all_match = ok ? 1 : 0;
    Json out{{"tables", arr}, {"all_match", ok}};
    *json_out = dup_string(dump_json(out, pretty_env()));
    return SLR_OK;
  });
}

}  // extern "C"
