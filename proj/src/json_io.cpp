#include "adjforge/json_io.hpp"

#include <fstream>
#include <map>

namespace adjforge::json_io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<int>();
}

// Inline object or a path string relative to base_dir.
json resolve_ref(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::string path = j.get<std::string>();
        if (!base_dir.empty() && !path.empty() && path[0] != '/')
            path = base_dir + "/" + path;
        return load_file(path);
    }
    return j;
}

int lookup(const std::vector<std::string>& names, const std::string& name,
           const char* what) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    fail(std::string("unknown ") + what + " \"" + name + "\"");
}

std::vector<uint32_t> load_vector(const json& j, uint32_t p, int len) {
    if (!j.is_array() || int(j.size()) != len) fail("coordinate vector has wrong length");
    std::vector<uint32_t> out(len);
    for (int i = 0; i < len; ++i) {
        if (!j[i].is_number_integer() || j[i].get<long long>() < 0)
            fail("coordinates must be nonnegative integers");
        out[i] = uint32_t(j[i].get<long long>() % p);
    }
    return out;
}

}  // namespace

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

fincat::CatPtr load_category(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    auto cat = std::make_shared<fincat::FinCategory>();
    const json& objs = need(j, "objects");
    if (!objs.is_array()) fail("\"objects\" must be an array of names");
    for (const auto& o : objs) {
        if (!o.is_string()) fail("object names must be strings");
        cat->object_names.push_back(o.get<std::string>());
    }
    cat->n_objects = int(cat->object_names.size());

    const json& mors = need(j, "morphisms");
    if (!mors.is_array()) fail("\"morphisms\" must be an array");
    for (const auto& m : mors) {
        cat->morphism_names.push_back(need_string(m, "name"));
        cat->mor_src.push_back(lookup(cat->object_names, need_string(m, "src"), "object"));
        cat->mor_dst.push_back(lookup(cat->object_names, need_string(m, "dst"), "object"));
    }
    const int nm = cat->mor_count();

    const json& ids = need(j, "identities");
    if (!ids.is_object()) fail("\"identities\" must map object names to morphism names");
    cat->identity.assign(cat->n_objects, fincat::kNone);
    for (auto it = ids.begin(); it != ids.end(); ++it) {
        int obj = lookup(cat->object_names, it.key(), "object");
        if (!it.value().is_string()) fail("identity entries must be morphism names");
        cat->identity[obj] =
            lookup(cat->morphism_names, it.value().get<std::string>(), "morphism");
    }
    for (int o = 0; o < cat->n_objects; ++o)
        if (cat->identity[o] == fincat::kNone)
            fail("object \"" + cat->object_names[o] + "\" has no identity");

    cat->table.assign(nm, std::vector<fincat::Mor>(nm, fincat::kNone));
    const json& comp = need(j, "compose");
    if (!comp.is_array()) fail("\"compose\" must be an array of [g, f, gf] triples");
    for (const auto& t : comp) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
            !t[2].is_string())
            fail("compose entries must be [g, f, gf] name triples");
        int g = lookup(cat->morphism_names, t[0].get<std::string>(), "morphism");
        int f = lookup(cat->morphism_names, t[1].get<std::string>(), "morphism");
        int gf = lookup(cat->morphism_names, t[2].get<std::string>(), "morphism");
        cat->table[g][f] = gf;
    }
    // identity composites may be omitted from the input
    for (fincat::Mor m = 0; m < nm; ++m) {
        fincat::Mor ids_ = cat->identity[cat->mor_dst[m]];
        fincat::Mor idt = cat->identity[cat->mor_src[m]];
        if (cat->table[ids_][m] == fincat::kNone) cat->table[ids_][m] = m;
        if (cat->table[m][idt] == fincat::kNone) cat->table[m][idt] = m;
    }
    return cat;
}

namespace {

fincat::FinFunctor load_functor_between(const json& j, const fincat::CatPtr& src,
                                        const fincat::CatPtr& dst) {
    fincat::FinFunctor f;
    f.src = src;
    f.dst = dst;
    const json& om = j.contains("objects") ? j.at("objects") : need(j, "obj_map");
    const json& mm = j.contains("morphisms") ? j.at("morphisms") : need(j, "mor_map");
    if (!om.is_object() || !mm.is_object()) fail("functor maps must be name->name objects");
    f.obj_map.assign(src->n_objects, -1);
    for (auto it = om.begin(); it != om.end(); ++it) {
        int a = lookup(src->object_names, it.key(), "source object");
        if (!it.value().is_string()) fail("functor object images must be names");
        f.obj_map[a] = lookup(dst->object_names, it.value().get<std::string>(), "target object");
    }
    f.mor_map.assign(src->mor_count(), fincat::kNone);
    for (auto it = mm.begin(); it != mm.end(); ++it) {
        int m = lookup(src->morphism_names, it.key(), "source morphism");
        if (!it.value().is_string()) fail("functor morphism images must be names");
        f.mor_map[m] =
            lookup(dst->morphism_names, it.value().get<std::string>(), "target morphism");
    }
    for (int a = 0; a < src->n_objects; ++a)
        if (f.obj_map[a] < 0) fail("functor misses object \"" + src->object_names[a] + "\"");
    for (int m = 0; m < src->mor_count(); ++m)
        if (f.mor_map[m] == fincat::kNone)
            fail("functor misses morphism \"" + src->morphism_names[m] + "\"");
    return f;
}

std::vector<fincat::Mor> load_components(const json& j, const fincat::CatPtr& src,
                                         const fincat::CatPtr& dst) {
    const json& comps = j.is_object() && j.contains("components") ? j.at("components") : j;
    if (!comps.is_object()) fail("natural transformation needs a \"components\" object");
    std::vector<fincat::Mor> out(src->n_objects, fincat::kNone);
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        int a = lookup(src->object_names, it.key(), "object");
        if (!it.value().is_string()) fail("components must be morphism names");
        out[a] = lookup(dst->morphism_names, it.value().get<std::string>(), "morphism");
    }
    for (int a = 0; a < src->n_objects; ++a)
        if (out[a] == fincat::kNone)
            fail("component missing at object \"" + src->object_names[a] + "\"");
    return out;
}

}  // namespace

fincat::FinFunctor load_functor(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    auto src = load_category(need(j, "src"), base_dir);
    auto dst = load_category(need(j, "dst"), base_dir);
    return load_functor_between(j, src, dst);
}

fincat::NatTrans load_nattrans(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    fincat::NatTrans a;
    a.from = load_functor(need(j, "from"), base_dir);
    a.to = load_functor(need(j, "to"), base_dir);
    a.component = load_components(j, a.from.src, a.from.dst);
    return a;
}

monadics::FinMonad load_monad(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    monadics::FinMonad m;
    m.cat = load_category(need(j, "category"), base_dir);
    m.t = load_functor_between(need(j, "T"), m.cat, m.cat);
    auto tt = fincat::compose_functors(m.t, m.t);
    m.mu = {tt, m.t, load_components(need(j, "mu"), m.cat, m.cat)};
    m.eta = {fincat::identity_functor(m.cat), m.t,
             load_components(need(j, "eta"), m.cat, m.cat)};
    return m;
}

monadics::FinComonad load_comonad(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    monadics::FinComonad s;
    s.cat = load_category(need(j, "category"), base_dir);
    s.s = load_functor_between(need(j, "S"), s.cat, s.cat);
    auto ss = fincat::compose_functors(s.s, s.s);
    s.delta = {s.s, ss, load_components(need(j, "delta"), s.cat, s.cat)};
    s.eps = {s.s, fincat::identity_functor(s.cat),
             load_components(need(j, "eps"), s.cat, s.cat)};
    return s;
}

adjunctions::FinAdjunction load_adjunction(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    auto a = load_category(need(j, "A"), base_dir);
    auto b = load_category(need(j, "B"), base_dir);
    adjunctions::FinAdjunction adj;
    adj.f = load_functor_between(need(j, "F"), a, b);
    adj.g = load_functor_between(need(j, "G"), b, a);
    auto gf = fincat::compose_functors(adj.g, adj.f);
    auto fg = fincat::compose_functors(adj.f, adj.g);
    adj.eta = {fincat::identity_functor(a), gf, load_components(need(j, "eta"), a, a)};
    adj.eps = {fg, fincat::identity_functor(b), load_components(need(j, "eps"), b, b)};
    return adj;
}

ffla::Matrix load_matrix(const json& j, uint32_t p) {
    if (!j.is_array()) fail("matrix must be an array of rows");
    int rows = int(j.size());
    int cols = rows == 0 ? 0 : int(j[0].size());
    ffla::Matrix m(rows, cols, p);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || int(j[r].size()) != cols) fail("ragged matrix rows");
        auto v = load_vector(j[r], p, cols);
        for (int c = 0; c < cols; ++c) m.at(r, c) = v[c];
    }
    return m;
}

json matrix_json(const ffla::Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

std::shared_ptr<const algmod::FqAlgebra> load_algebra(const json& jr,
                                                      const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    auto alg = std::make_shared<algmod::FqAlgebra>();
    alg->p = uint32_t(need_int(j, "p"));
    alg->dim = need_int(j, "dim");
    if (j.contains("name") && j.at("name").is_string()) alg->name = j.at("name");
    const json& cs = need(j, "constants");
    if (!cs.is_array() || int(cs.size()) != alg->dim) fail("\"constants\" must have dim rows");
    alg->constants.resize(alg->dim);
    for (int i = 0; i < alg->dim; ++i) {
        if (!cs[i].is_array() || int(cs[i].size()) != alg->dim)
            fail("\"constants\" rows must have dim entries");
        alg->constants[i].resize(alg->dim);
        for (int k = 0; k < alg->dim; ++k)
            alg->constants[i][k] = load_vector(cs[i][k], alg->p, alg->dim);
    }
    alg->unit = load_vector(need(j, "unit"), alg->p, alg->dim);
    return alg;
}

algmod::LeftModule load_module(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    algmod::LeftModule m;
    m.algebra = load_algebra(need(j, "algebra"), base_dir);
    m.dim = need_int(j, "dim");
    if (j.contains("name") && j.at("name").is_string()) m.name = j.at("name");
    const json& act = need(j, "action");
    if (!act.is_array() || int(act.size()) != m.algebra->dim)
        fail("\"action\" must have one matrix per algebra basis element");
    for (const auto& a : act) {
        auto mat = load_matrix(a, m.algebra->p);
        if (mat.rows() != m.dim || mat.cols() != m.dim) fail("action matrices must be dim x dim");
        m.action.push_back(mat);
    }
    return m;
}

algmod::Bimodule load_bimodule(const json& jr, const std::string& base_dir) {
    json j = resolve_ref(jr, base_dir);
    algmod::Bimodule b;
    b.left_algebra = load_algebra(need(j, "algebra"), base_dir);
    b.right_algebra = load_algebra(need(j, "right_algebra"), base_dir);
    if (b.left_algebra->p != b.right_algebra->p) fail("bimodule algebras over different primes");
    b.dim = need_int(j, "dim");
    if (j.contains("name") && j.at("name").is_string()) b.name = j.at("name");
    const json& la = need(j, "action");
    const json& ra = need(j, "right_action");
    if (!la.is_array() || int(la.size()) != b.left_algebra->dim)
        fail("\"action\" must have one matrix per left basis element");
    if (!ra.is_array() || int(ra.size()) != b.right_algebra->dim)
        fail("\"right_action\" must have one matrix per right basis element");
    for (const auto& a : la) {
        auto mat = load_matrix(a, b.left_algebra->p);
        if (mat.rows() != b.dim || mat.cols() != b.dim) fail("action matrices must be dim x dim");
        b.left_action.push_back(mat);
    }
    for (const auto& a : ra) {
        auto mat = load_matrix(a, b.left_algebra->p);
        if (mat.rows() != b.dim || mat.cols() != b.dim)
            fail("right_action matrices must be dim x dim");
        b.right_action.push_back(mat);
    }
    return b;
}

json algebra_json(const algmod::FqAlgebra& r) {
    json cs = json::array();
    for (int i = 0; i < r.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < r.dim; ++k) row.push_back(r.constants[i][k]);
        cs.push_back(row);
    }
    return {{"p", r.p}, {"dim", r.dim}, {"constants", cs}, {"unit", r.unit},
            {"name", r.name}};
}

json module_json(const algmod::LeftModule& m) {
    json act = json::array();
    for (const auto& a : m.action) act.push_back(matrix_json(a));
    return {{"algebra", algebra_json(*m.algebra)}, {"dim", m.dim}, {"action", act},
            {"name", m.name}};
}

json bimodule_json(const algmod::Bimodule& b) {
    json la = json::array(), ra = json::array();
    for (const auto& a : b.left_action) la.push_back(matrix_json(a));
    for (const auto& a : b.right_action) ra.push_back(matrix_json(a));
    return {{"algebra", algebra_json(*b.left_algebra)},
            {"right_algebra", algebra_json(*b.right_algebra)},
            {"dim", b.dim},
            {"action", la},
            {"right_action", ra},
            {"name", b.name}};
}

namespace {

json witness_map(const std::vector<std::string>& ws) {
    json out = json::object();
    for (const auto& w : ws) {
        auto pos = w.find(':');
        std::string key = pos == std::string::npos ? "note" : w.substr(0, pos);
        std::string val = pos == std::string::npos ? w : w.substr(pos + 1);
        while (!val.empty() && val.front() == ' ') val.erase(val.begin());
        if (out.contains(key))
            out[key] = out[key].get<std::string>() + "; " + val;
        else
            out[key] = val;
    }
    return out;
}

}  // namespace

json battery_json(const monadics::BatteryReport& r) {
    return {{"conditions",
             {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e1", r.e1},
              {"e2", r.e2}, {"f", r.f}, {"g", r.g}}},
            {"witnesses", witness_map(r.witnesses)},
            {"coherent", r.coherent()},
            {"verdict", r.verdict()}};
}

json pair_battery_json(const adjunctions::PairBatteryReport& r) {
    return {{"conditions",
             {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e},
              {"f", r.f}, {"g", r.g}, {"h", r.h}}},
            {"witnesses", witness_map(r.witnesses)},
            {"coherent", r.coherent()},
            {"verdict", r.verdict()}};
}

json concrete_battery_json(const starlab::ConcreteBattery& r) {
    return {{"conditions",
             {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}, {"f", r.f}}},
            {"window_bounded", r.window_bounded},
            {"witnesses", witness_map(r.witnesses)},
            {"coherent", r.coherent()},
            {"verdict", r.verdict()}};
}

json star_report_json(const starlab::StarContext& ctx, const starlab::StarVerdict& v) {
    json certs = json::array();
    for (const auto& c : v.certificates)
        certs.push_back(
            {{"kind", c.kind == starlab::Certificate::Kind::UnitNotSurjective
                          ? "unit-not-surjective"
                          : "counit-not-injective"},
             {"module", module_json(c.module)},
             {"map", matrix_json(c.map)}});
    const char* verdict = v.status == starlab::StarStatus::StarOnWindow ? "star-on-window"
                          : v.status == starlab::StarStatus::Refuted    ? "refuted"
                                                                        : "undecided";
    json ctx_json = {{"ring", algebra_json(*ctx.ring)},
                     {"bimodule", bimodule_json(ctx.p)},
                     {"endo_auto_computed", ctx.endo_auto_computed},
                     {"cogenerator", "field dual of the right regular module"},
                     {"window_dim", ctx.window_dim},
                     {"windows_complete", ctx.windows_complete},
                     {"r_window_size", ctx.r_window.size()},
                     {"s_window_size", ctx.s_window.size()}};
    json out = {{"context", ctx_json},
                {"battery", concrete_battery_json(v.battery)},
                {"verdict", verdict},
                {"window_dim", v.window_dim},
                {"certificates", certs},
                {"notes", v.notes}};
    if (v.status == starlab::StarStatus::StarOnWindow) {
        out["closure"] = {{"static_closed_under_quotients", v.static_closed_under_quotients},
                          {"adstatic_closed_under_submodules", v.adstatic_closed_under_submodules},
                          {"mutually_inverse_on_fixed", v.mutually_inverse_on_fixed},
                          {"coproduct_psi_epi", v.coproduct_psi_epi},
                          {"product_phi_mono", v.product_phi_mono}};
    }
    return out;
}

starlab::Certificate load_certificate(const json& j, uint32_t p,
                                      const std::shared_ptr<const algmod::FqAlgebra>&) {
    starlab::Certificate cert{starlab::Certificate::Kind::UnitNotSurjective,
                              algmod::LeftModule{}, ffla::Matrix(0, 0, p)};
    std::string kind = need_string(j, "kind");
    if (kind == "unit-not-surjective")
        cert.kind = starlab::Certificate::Kind::UnitNotSurjective;
    else if (kind == "counit-not-injective")
        cert.kind = starlab::Certificate::Kind::CounitNotInjective;
    else
        fail("unknown certificate kind: " + kind);
    cert.module = load_module(need(j, "module"), "");
    cert.map = load_matrix(need(j, "map"), p);
    return cert;
}

}  // namespace adjforge::json_io
