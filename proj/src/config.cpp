#include "fsbeam/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fsbeam/error.hpp"
#include "fsbeam/supplementary.hpp"

namespace fsbeam {

namespace {

using nlohmann::json;

class Reader {
public:
    explicit Reader(std::string_view source) : source_(source) {}

    [[noreturn]] void fail(const std::string& path, const std::string& what) const {
        throw ConfigError(source_ + ": " + (path.empty() ? std::string("<root>") : path) + ": " + what);
    }

    json parse(std::string_view text) const {
        try {
            return json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            const auto [line, column] = position(text, e.byte);
            std::ostringstream os;
            os << source_ << ": line " << line << ", column " << column << ": " << e.what();
            throw ConfigError(os.str());
        }
    }

    double number(const json& j, const std::string& path) const {
        if (!j.is_number()) fail(path, "expected a number, got " + std::string(j.type_name()));
        const double v = j.get<double>();
        if (!std::isfinite(v)) fail(path, "value is not finite");
        return v;
    }

    int integer(const json& j, const std::string& path) const {
        if (!j.is_number_integer()) fail(path, "expected an integer, got " + j.dump());
        return j.get<int>();
    }

    std::string string(const json& j, const std::string& path) const {
        if (!j.is_string()) fail(path, "expected a string, got " + std::string(j.type_name()));
        return j.get<std::string>();
    }

    const json& array(const json& j, const std::string& path) const {
        if (!j.is_array()) fail(path, "expected an array, got " + std::string(j.type_name()));
        return j;
    }

    const json& object(const json& j, const std::string& path) const {
        if (!j.is_object()) fail(path, "expected an object, got " + std::string(j.type_name()));
        return j;
    }

    void only_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> keys) const {
        for (const auto& [key, value] : j.items()) {
            bool known = false;
            for (std::string_view k : keys) known = known || key == k;
            if (!known) fail(join(path, key), "unknown key");
        }
    }

    static std::string join(const std::string& path, std::string_view key) {
        return path.empty() ? std::string(key) : path + "." + std::string(key);
    }
    static std::string index(const std::string& path, std::size_t i) {
        return path + "[" + std::to_string(i) + "]";
    }

private:
    static std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return {line, column};
    }

    std::string source_;
};

EndCondition read_end(const Reader& r, const json& j, const std::string& path) {
    r.object(j, path);
    r.only_keys(j, path, {"kind", "v1", "v2"});
    if (!j.contains("kind")) r.fail(Reader::join(path, "kind"), "missing (expected C, S or F)");
    const std::string kind = r.string(j["kind"], Reader::join(path, "kind"));
    EndCondition end;
    try {
        if (kind.size() != 1) throw InvalidInput("");
        end.kind = end_kind_from_char(kind[0]);
    } catch (const InvalidInput&) {
        r.fail(Reader::join(path, "kind"), "unknown end kind '" + kind + "' (expected C, S or F)");
    }
    if (j.contains("v1")) end.value1 = r.number(j["v1"], Reader::join(path, "v1"));
    if (j.contains("v2")) end.value2 = r.number(j["v2"], Reader::join(path, "v2"));
    return end;
}

BoundaryConditionSpec read_bc(const Reader& r, const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return BoundaryConditionSpec::from_label(j.get<std::string>());
        } catch (const InvalidInput& e) {
            r.fail(path, e.what());
        }
    }
    r.object(j, path);
    r.only_keys(j, path, {"left", "right"});
    if (!j.contains("left") || !j.contains("right")) r.fail(path, "needs both 'left' and 'right'");
    return {read_end(r, j["left"], Reader::join(path, "left")),
            read_end(r, j["right"], Reader::join(path, "right"))};
}

LoadSpec read_load(const Reader& r, const json& j, const std::string& path) {
    r.object(j, path);
    r.only_keys(j, path, {"poly", "points", "table"});
    LoadSpec load;
    if (j.contains("poly")) {
        const std::string p = Reader::join(path, "poly");
        const json& arr = r.array(j["poly"], p);
        for (std::size_t i = 0; i < arr.size(); ++i) load.poly.push_back(r.number(arr[i], Reader::index(p, i)));
    }
    if (j.contains("points")) {
        const std::string p = Reader::join(path, "points");
        const json& arr = r.array(j["points"], p);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string pi = Reader::index(p, i);
            r.object(arr[i], pi);
            r.only_keys(arr[i], pi, {"P", "x0"});
            if (!arr[i].contains("P") || !arr[i].contains("x0")) r.fail(pi, "needs 'P' and 'x0'");
            load.points.push_back({r.number(arr[i]["P"], Reader::join(pi, "P")),
                                   r.number(arr[i]["x0"], Reader::join(pi, "x0"))});
        }
    }
    if (j.contains("table")) {
        const std::string p = Reader::join(path, "table");
        r.object(j["table"], p);
        r.only_keys(j["table"], p, {"x", "q"});
        std::vector<double> xs, qs;
        for (const char* key : {"x", "q"}) {
            const std::string pk = Reader::join(p, key);
            if (!j["table"].contains(key)) r.fail(pk, "missing");
            const json& arr = r.array(j["table"][key], pk);
            auto& dst = std::string_view(key) == "x" ? xs : qs;
            for (std::size_t i = 0; i < arr.size(); ++i) dst.push_back(r.number(arr[i], Reader::index(pk, i)));
        }
        try {
            load.sampled = tabulated_load(std::move(xs), std::move(qs));
        } catch (const InvalidInput& e) {
            r.fail(p, e.what());
        }
    }
    return load;
}

FoundationBeamModel read_model(const Reader& r, const json& j, const std::string& path) {
    const auto pick = [&](const char* dim, const char* rel) -> std::pair<double, bool> {
        const bool has_dim = j.contains(dim);
        const bool has_rel = j.contains(rel);
        if (has_dim == has_rel) {
            r.fail(path, std::string("give exactly one of '") + dim + "' and '" + rel + "'");
        }
        return has_dim ? std::pair{r.number(j[dim], Reader::join(path, dim)), false}
                       : std::pair{r.number(j[rel], Reader::join(path, rel)), true};
    };
    const double EI = j.contains("EI") ? r.number(j["EI"], Reader::join(path, "EI")) : 1.0;
    const double a = j.contains("a") ? r.number(j["a"], Reader::join(path, "a")) : 1.0;
    auto [k, k_rel] = pick("k", "k_r");
    auto [Gp, G_rel] = pick("Gp", "G_pr");
    if (k_rel) k *= EI / (a * a * a * a);
    if (G_rel) Gp *= EI / (a * a);
    try {
        return FoundationBeamModel(EI, a, k, Gp);
    } catch (const InvalidInput& e) {
        r.fail(path, e.what());
    }
}

std::vector<int> read_int_list(const Reader& r, const json& j, const std::string& path, int min) {
    std::vector<int> out;
    const json& arr = r.array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const int v = r.integer(arr[i], Reader::index(path, i));
        if (v < min) r.fail(Reader::index(path, i), "must be at least " + std::to_string(min));
        out.push_back(v);
    }
    return out;
}

Method read_method(const Reader& r, const json& j, const std::string& path) {
    try {
        return method_from_string(r.string(j, path));
    } catch (const InvalidInput& e) {
        r.fail(path, e.what());
    }
}

ExperimentPlan read_plan(const Reader& r, const json& j, const std::string& path) {
    r.object(j, path);
    r.only_keys(j, path,
                {"name", "scheme", "bc", "EI", "a", "parameters", "N1s", "methods", "truncations",
                 "load", "reference_N1s", "profile_points"});
    ExperimentPlan plan;
    if (j.contains("name")) plan.name = r.string(j["name"], Reader::join(path, "name"));
    if (j.contains("scheme") == j.contains("bc")) r.fail(path, "give exactly one of 'scheme' and 'bc'");
    plan.bc = j.contains("scheme") ? read_bc(r, j["scheme"], Reader::join(path, "scheme"))
                                   : read_bc(r, j["bc"], Reader::join(path, "bc"));
    if (j.contains("EI")) plan.EI = r.number(j["EI"], Reader::join(path, "EI"));
    if (j.contains("a")) plan.a = r.number(j["a"], Reader::join(path, "a"));

    const std::string pp = Reader::join(path, "parameters");
    if (!j.contains("parameters")) r.fail(pp, "missing");
    const json& params = r.array(j["parameters"], pp);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::string pi = Reader::index(pp, i);
        const json& e = params[i];
        if (e.is_array()) {
            if (e.size() != 2) r.fail(pi, "expected [k_r, G_pr]");
            plan.parameters.push_back({r.number(e[0], Reader::index(pi, 0)), r.number(e[1], Reader::index(pi, 1))});
        } else {
            r.object(e, pi);
            r.only_keys(e, pi, {"k_r", "G_pr"});
            if (!e.contains("k_r") || !e.contains("G_pr")) r.fail(pi, "needs 'k_r' and 'G_pr'");
            plan.parameters.push_back({r.number(e["k_r"], Reader::join(pi, "k_r")),
                                       r.number(e["G_pr"], Reader::join(pi, "G_pr"))});
        }
        try {
            plan.model(plan.parameters.back());
        } catch (const InvalidInput& ex) {
            r.fail(pi, ex.what());
        }
    }
    if (j.contains("N1s")) {
        plan.supplementary_orders = read_int_list(r, j["N1s"], Reader::join(path, "N1s"), 0);
        for (std::size_t i = 0; i < plan.supplementary_orders.size(); ++i) {
            if (plan.supplementary_orders[i] > kMaxSupplementaryOrder) {
                r.fail(Reader::index(Reader::join(path, "N1s"), i),
                       "must not exceed " + std::to_string(kMaxSupplementaryOrder));
            }
        }
    }
    if (j.contains("methods")) {
        const std::string pm = Reader::join(path, "methods");
        const json& arr = r.array(j["methods"], pm);
        plan.methods.clear();
        for (std::size_t i = 0; i < arr.size(); ++i) plan.methods.push_back(read_method(r, arr[i], Reader::index(pm, i)));
    }
    if (j.contains("truncations")) {
        plan.truncations = read_int_list(r, j["truncations"], Reader::join(path, "truncations"), 1);
    }
    if (!j.contains("load")) r.fail(Reader::join(path, "load"), "missing");
    plan.load = read_load(r, j["load"], Reader::join(path, "load"));
    try {
        plan.load.validate(plan.a);
    } catch (const InvalidInput& e) {
        r.fail(Reader::join(path, "load"), e.what());
    }
    if (j.contains("reference_N1s")) {
        plan.reference_order = r.integer(j["reference_N1s"], Reader::join(path, "reference_N1s"));
        if (plan.reference_order < 1 || plan.reference_order > kMaxSupplementaryOrder) {
            r.fail(Reader::join(path, "reference_N1s"),
                   "must lie in 1.." + std::to_string(kMaxSupplementaryOrder));
        }
    }
    if (j.contains("profile_points")) {
        plan.profile_points = r.integer(j["profile_points"], Reader::join(path, "profile_points"));
        if (plan.profile_points < 2) r.fail(Reader::join(path, "profile_points"), "must be at least 2");
    }
    return plan;
}

}  // namespace

FoundationBeamModel ExperimentPlan::model(const ParameterPair& p) const {
    return FoundationBeamModel(EI, a, p.k_r * EI / (a * a * a * a), p.G_pr * EI / (a * a));
}

ProblemConfig parse_problem_config(std::string_view text, std::string_view source) {
    const Reader r(source);
    const json doc = r.parse(text);
    r.object(doc, "");
    const json* root = &doc;
    std::string path;
    if (doc.contains("problem")) {
        r.only_keys(doc, "", {"problem"});
        root = &doc["problem"];
        path = "problem";
        r.object(*root, path);
    }
    const json& j = *root;
    r.only_keys(j, path, {"EI", "a", "k", "k_r", "Gp", "G_pr", "bc", "scheme", "load", "method", "M", "N1s"});
    const FoundationBeamModel model = read_model(r, j, path);
    if (j.contains("scheme") == j.contains("bc")) r.fail(path, "give exactly one of 'scheme' and 'bc'");
    const BoundaryConditionSpec bc = j.contains("scheme")
                                         ? read_bc(r, j["scheme"], Reader::join(path, "scheme"))
                                         : read_bc(r, j["bc"], Reader::join(path, "bc"));
    if (!j.contains("load")) r.fail(Reader::join(path, "load"), "missing");
    LoadSpec load = read_load(r, j["load"], Reader::join(path, "load"));

    ProblemConfig out{[&] {
        try {
            return BeamProblem(model, bc, std::move(load));
        } catch (const InvalidInput& e) {
            r.fail(Reader::join(path, "load"), e.what());
        }
    }()};
    if (j.contains("method")) out.method = read_method(r, j["method"], Reader::join(path, "method"));
    if (j.contains("M")) {
        out.terms = r.integer(j["M"], Reader::join(path, "M"));
        if (out.terms < 1) r.fail(Reader::join(path, "M"), "must be at least 1");
    }
    if (j.contains("N1s")) {
        out.supplementary_order = r.integer(j["N1s"], Reader::join(path, "N1s"));
        if (out.supplementary_order < 0 || out.supplementary_order > kMaxSupplementaryOrder) {
            r.fail(Reader::join(path, "N1s"), "must lie in 0.." + std::to_string(kMaxSupplementaryOrder));
        }
        if (out.supplementary_order > 0 && out.method == Method::VM) {
            r.fail(Reader::join(path, "N1s"), "the variational method runs without a supplementary solution");
        }
    }
    return out;
}

std::vector<ExperimentPlan> parse_experiment_plans(std::string_view text, std::string_view source) {
    const Reader r(source);
    const json doc = r.parse(text);
    r.object(doc, "");
    std::vector<ExperimentPlan> plans;
    if (doc.contains("plans")) {
        r.only_keys(doc, "", {"plans"});
        const json& arr = r.array(doc["plans"], "plans");
        for (std::size_t i = 0; i < arr.size(); ++i) plans.push_back(read_plan(r, arr[i], Reader::index("plans", i)));
    } else {
        plans.push_back(read_plan(r, doc, ""));
    }
    return plans;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace fsbeam
