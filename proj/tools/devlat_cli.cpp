// Command-line front end. Reports are JSON on stdout; exit status 0 means
// success or a true verdict, 1 a false verdict with witness, 2 bad input,
// 3 a resource ceiling.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "devlat/devlat.hpp"
#include "schemas.hpp"

namespace {

using namespace devlat;

enum Exit { exit_ok = 0, exit_false = 1, exit_input = 2, exit_resource = 3 };

struct Config {
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 1;
    Limits limits;
};

struct Outcome {
    Json report;
    int status = exit_ok;
    std::string text;  // replaces the JSON report for --format dot|text
};

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Json ids_json(const FinitePoset& p, const std::vector<Element>& xs) {
    Json a = Json::array();
    for (Element x : xs) a.push_back(p.id(x));
    return a;
}

template <std::size_t N>
Json counterexample_json(const FinitePoset& p, const Verdict<N>& v) {
    if (v.holds) return nullptr;
    return ids_json(p, {v.counterexample.begin(), v.counterexample.end()});
}

Json nullable_point(const std::optional<Point>& p) { return p ? point_to_json(*p) : Json(nullptr); }

Json properties_json(const FinitePoset& p, const PropertyReport& r) {
    return Json{{"left_isotone", r.left_isotone.holds},
                {"right_antitone", r.right_antitone.holds},
                {"monotone", r.monotone},
                {"cevian", r.cevian.holds},
                {"left_isotone_counterexample", counterexample_json(p, r.left_isotone)},
                {"right_antitone_counterexample", counterexample_json(p, r.right_antitone)},
                {"cevian_counterexample", counterexample_json(p, r.cevian)}};
}

Enumeration parse_order(const FinitePoset& p, const std::string& text) {
    Enumeration e;
    for (const auto& id : split_ids(text)) e.push_back(p.index_of(id));
    enumeration_positions(p, e);
    return e;
}

// ---- lattice ---------------------------------------------------------------

Outcome lattice_check(const std::string& path, const Config& cfg) {
    const FiniteDistributiveLattice d = lattice_from_json(read_json_file(path), false);
    const FinitePoset& p = d.carrier();
    Outcome o;
    if (cfg.format == "dot") o.text = to_dot(p, "lattice");
    const auto cn = is_completely_normal(d);
    const auto zd = is_zero_distributive(d);
    const PrimeIdealPoset primes = prime_ideal_poset(d);
    const auto root = is_root_system(primes);
    Json prime_list = Json::array();
    for (const auto& s : primes.ideals) prime_list.push_back(ids_json(p, s));
    Json root_cx = nullptr;
    if (!root.holds) {
        root_cx = Json::array();
        for (Element i : root.counterexample) root_cx.push_back(ids_json(p, primes.ideals[i]));
    }
    o.report = Json{{"lattice", lattice_to_json(d)},
                    {"size", d.size()},
                    {"distributive", d.is_distributive()},
                    {"completely_normal", cn.holds},
                    {"counterexample", counterexample_json(p, cn)},
                    {"zero_distributive", zd.holds},
                    {"zero_distributive_counterexample", counterexample_json(p, zd)},
                    {"root_system", root.holds},
                    {"root_system_counterexample", root_cx},
                    {"prime_ideals", prime_list}};
    const bool all = d.is_distributive() && cn.holds && zd.holds && root.holds;
    o.status = all ? exit_ok : exit_false;
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "size " << d.size() << "\ndistributive " << d.is_distributive() << "\ncompletely_normal " << cn.holds;
        if (!cn.holds) os << " (" << p.id(cn.counterexample[0]) << ", " << p.id(cn.counterexample[1]) << ")";
        os << "\nzero_distributive " << zd.holds << "\nroot_system " << root.holds << "\n";
        o.text = os.str();
    }
    return o;
}

// ---- deviation ---------------------------------------------------------------

Outcome deviation_check(const std::string& lattice_path, const std::string& map_path) {
    const FiniteDistributiveLattice d = lattice_from_json(read_json_file(lattice_path));
    const FinitePoset& p = d.carrier();
    const BinaryMap m = map_from_json(p, d, read_json_file(map_path));
    const auto checked = check_deviation(d, m);
    Outcome o;
    Json violation = nullptr;
    if (const auto* v = std::get_if<DeviationViolation>(&checked)) {
        violation = Json{{"axiom", v->axiom}, {"pair", ids_json(p, {v->x, v->y})}};
        o.status = exit_false;
    }
    o.report = Json{{"deviation", violation.is_null()},
                    {"violation", violation},
                    {"properties", properties_json(p, map_properties(d, m))}};
    return o;
}

Outcome deviation_search(const std::string& lattice_path, bool monotone, bool cevian, bool shuffle,
                         const Config& cfg) {
    const FiniteDistributiveLattice d = lattice_from_json(read_json_file(lattice_path));
    const FinitePoset& p = d.carrier();
    SearchOptions opt{monotone, cevian, shuffle ? std::optional<std::uint64_t>(cfg.seed) : std::nullopt};
    Outcome o;
    o.report = Json{{"found", false}, {"constraints", {{"monotone", monotone}, {"cevian", cevian}}}};
    if (auto t = search_deviation(d, opt)) {
        o.report["found"] = true;
        o.report["deviation"] = map_to_json(p, d, t->map());
        o.report["properties"] = properties_json(p, deviation_properties(d, *t));
    } else {
        o.status = exit_false;
        o.report["deviation"] = nullptr;
        o.report["properties"] = nullptr;
        o.report["completely_normal_counterexample"] = counterexample_json(p, is_completely_normal(d));
    }
    return o;
}

Outcome deviation_enumerate(const std::string& lattice_path, std::size_t limit, bool monotone, bool cevian) {
    const FiniteDistributiveLattice d = lattice_from_json(read_json_file(lattice_path));
    const auto all = enumerate_deviations(d, limit, {monotone, cevian, std::nullopt});
    Json list = Json::array();
    for (const auto& t : all) list.push_back(map_to_json(d.carrier(), d, t.map()));
    Outcome o;
    o.report = Json{{"count", all.size()}, {"limit", limit}, {"deviations", std::move(list)}};
    return o;
}

// ---- adjust --------------------------------------------------------------------

Outcome adjust(const std::string& lattice_path, const std::string& map_path, const std::string& order,
               const std::string& poset_path, const std::string& strategy) {
    const FiniteDistributiveLattice d = lattice_from_json(read_json_file(lattice_path));
    const FinitePoset m = poset_path.empty() ? d.carrier() : poset_from_json(read_json_file(poset_path));
    const BinaryMap map = map_from_json(m, d, read_json_file(map_path));
    const Enumeration e = order.empty() ? identity_enumeration(m) : parse_order(m, order);
    if (strategy != "sweep" && strategy != "finitary") throw InputError("strategy must be 'sweep' or 'finitary'");
    const AdjustmentResult r = monotone_adjustment(
        m, d, map, e, strategy == "sweep" ? AdjustStrategy::full_sweep : AdjustStrategy::finitary_bounds);
    Json trace = Json::array();
    auto pairs = [&](const std::vector<PairSet>& ps) {
        Json a = Json::array();
        for (auto [x, y] : ps) a.push_back({m.id(x), m.id(y)});
        return a;
    };
    for (const auto& s : r.trace) {
        trace.push_back(Json{{"pair", {m.id(s.a), m.id(s.b)}},
                             {"meetands", pairs(s.meetands)},
                             {"joinands", pairs(s.joinands)},
                             {"meet", d.id(s.meet_part)},
                             {"join", d.id(s.join_part)},
                             {"value", d.id(s.value)}});
    }
    const bool monotone = !monotonicity_violation(m, d, r.d_prime).has_value();
    // The deviation axioms only make sense when M is the lattice itself.
    const bool same_carrier = m == d.carrier();
    Outcome o;
    o.report = Json{{"order", ids_json(m, e)},
                    {"strategy", strategy},
                    {"d_prime", map_to_json(m, d, r.d_prime)},
                    {"monotone", monotone},
                    {"deviation", same_carrier && is_deviation(d, r.d_prime)},
                    {"cevian", same_carrier && map_properties(d, r.d_prime).cevian.holds},
                    {"trace", std::move(trace)}};
    return o;
}

// ---- poset -------------------------------------------------------------------------

Outcome poset_witness(const std::string& path, const std::string& order, const Config& cfg) {
    const FinitePoset p = poset_from_json(read_json_file(path));
    const Enumeration e = order.empty() ? identity_enumeration(p) : parse_order(p, order);
    const SeparabilityWitness w = witness_from_order(p, e);
    const bool valid = is_separability_witness(p, w);
    const bool bound = !check_order_bound(p, w, e).has_value();
    Outcome o;
    o.report = Json{{"order", ids_json(p, e)}, {"witness", witness_to_json(p, w)}, {"valid", valid}, {"order_bound", bound}};
    o.status = valid && bound ? exit_ok : exit_false;
    if (cfg.format == "dot") o.text = to_dot(p, "poset");
    return o;
}

Outcome poset_order(const std::string& path, const std::string& witness_path) {
    const FinitePoset p = poset_from_json(read_json_file(path));
    const SeparabilityWitness w = witness_from_json(p, read_json_file(witness_path));
    Outcome o;
    if (auto v = check_separability_witness(p, w)) {
        o.status = exit_false;
        o.report = Json{{"valid", false},
                        {"violation", {{"kind", to_string(v->kind)}, {"pair", ids_json(p, {v->first, v->second})}}},
                        {"order", nullptr},
                        {"blocks", nullptr}};
        return o;
    }
    const BlockOrder b = order_from_witness(p, w);
    Json blocks = Json::array();
    for (const auto& blk : b.blocks) blocks.push_back(ids_json(p, blk));
    o.report = Json{{"valid", true}, {"violation", nullptr}, {"order", ids_json(p, b.order)}, {"blocks", blocks}};
    return o;
}

Outcome poset_amalgam(const std::string& path) {
    const AmalgamInput in = amalgam_from_json(read_json_file(path));
    const StrongAmalgamSpec& spec = in.spec;
    Outcome o;
    if (auto v = check_strong_amalgam(spec)) {
        std::string detail = v->detail;
        if (v->p) detail += "; p=" + spec.index.id(*v->p);
        if (v->q) detail += "; q=" + spec.index.id(*v->q);
        if (v->x) detail += "; x=" + spec.carrier.id(*v->x);
        if (v->y) detail += "; y=" + spec.carrier.id(*v->y);
        o.status = exit_false;
        o.report = Json{{"strong_amalgam", false},
                        {"violation", {{"clause", to_string(v->clause)}, {"detail", detail}}},
                        {"witness", nullptr}};
        return o;
    }
    std::vector<SeparabilityWitness> blocks;
    for (const auto& member : spec.family) {
        const FinitePoset sub = spec.carrier.induced(member);
        blocks.push_back(witness_from_order(sub, identity_enumeration(sub)));
    }
    const std::vector<Element> nu = in.nu ? *in.nu : first_member_assignment(spec);
    const SeparabilityWitness w = witness_from_amalgam(spec, blocks, nu);
    const bool valid = is_separability_witness(spec.carrier, w);
    o.report = Json{{"strong_amalgam", true},
                    {"violation", nullptr},
                    {"witness", witness_to_json(spec.carrier, w)},
                    {"valid", valid}};
    o.status = valid ? exit_ok : exit_false;
    return o;
}

// ---- semilinear -----------------------------------------------------------------------

Outcome semilinear_includes(const std::string& s_path, const std::string& t_path, const Config& cfg) {
    const SemilinearSet s = semilinear_from_json(read_json_file(s_path));
    const SemilinearSet t = semilinear_from_json(read_json_file(t_path));
    const InclusionResult r = includes(s, t, cfg.limits);
    Outcome o;
    o.report = Json{{"includes", r.holds}, {"witness", nullable_point(r.witness)}};
    o.status = r.holds ? exit_ok : exit_false;
    return o;
}

Outcome semilinear_shadow(const std::string& path, const std::string& vars, bool lower, const Config& cfg) {
    const SemilinearSet s = semilinear_from_json(read_json_file(path));
    IndexSet x;
    for (const auto& v : split_ids(vars)) {
        try {
            x.push_back(std::stoul(v));
        } catch (const std::exception&) {
            throw InputError("variable index '" + v + "' is not a number");
        }
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    const SemilinearSet r = prune(lower ? lower_shadow(s, x, cfg.limits) : upper_shadow(s, x));
    Outcome o;
    o.report = Json{{"side", lower ? "lower" : "upper"},
                    {"variables", x},
                    {"set", semilinear_to_json(r)},
                    {"empty", r.cells.empty()}};
    return o;
}

// ---- vlat ---------------------------------------------------------------------------------

std::optional<SemilinearSet> region_for(bool omega, std::size_t n) {
    return omega ? std::optional<SemilinearSet>(omega_region(n)) : std::nullopt;
}

Outcome vlat_leq(const std::string& g, const std::string& h, std::size_t n, bool omega, const Config& cfg) {
    const VLTerm tg = parse_term(g, n), th = parse_term(h, n);
    const IdealComparison r = ideal_leq(tg, th, n, region_for(omega, n), cfg.limits);
    Outcome o;
    o.report = Json{{"g", format_term(tg)},
                    {"h", format_term(th)},
                    {"relative", omega},
                    {"leq", r.holds},
                    {"witness", nullable_point(r.witness)}};
    o.status = r.holds ? exit_ok : exit_false;
    return o;
}

Outcome vlat_cevian(const std::vector<std::string>& terms, std::size_t n, bool omega, const Config& cfg) {
    if (terms.size() != 3) throw InputError("cevian takes exactly three terms");
    const VLTerm g = parse_term(terms[0], n), h = parse_term(terms[1], n), k = parse_term(terms[2], n);
    const IdealComparison r = check_cevian_triple(g, h, k, n, region_for(omega, n), cfg.limits);
    Outcome o;
    o.report = Json{{"terms", {format_term(g), format_term(h), format_term(k)}},
                    {"relative", omega},
                    {"cevian", r.holds},
                    {"witness", nullable_point(r.witness)}};
    o.status = r.holds ? exit_ok : exit_false;
    return o;
}

// Random terms over g0..g{n-1}: leaves are generators or small rational
// constants, inner nodes are +, -, ∨, ∧ or a scaling.
VLTerm random_term(std::mt19937_64& rng, std::size_t n, unsigned depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<std::size_t> gen(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    const int what = depth == 0 ? (pick(rng) < 5 ? 0 : 1) : pick(rng);
    switch (what) {
        case 0: return VLTerm::gen(gen(rng));
        case 1: return VLTerm::constant(Rational(coef(rng), 2));
        case 2: return random_term(rng, n, depth - 1) + random_term(rng, n, depth - 1);
        case 3: return join(random_term(rng, n, depth - 1), random_term(rng, n, depth - 1));
        case 4: return meet(random_term(rng, n, depth - 1), random_term(rng, n, depth - 1));
        default: {
            int c = coef(rng);
            return Rational(c == 0 ? 1 : c) * random_term(rng, n, depth - 1);
        }
    }
}

Outcome vlat_pscom(std::size_t n, std::size_t alpha, const std::string& c_text, const std::vector<std::string>& probe_texts,
                   std::size_t random_count, unsigned depth, const Config& cfg) {
    const Rational c = parse_rational(c_text);
    std::vector<VLTerm> probes;
    for (const auto& t : probe_texts) probes.push_back(parse_term(t, n));
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < random_count; ++i) probes.push_back(random_term(rng, n, depth));
    const PseudocomplementReport r = pseudocomplement_probe(n, alpha, c, probes, cfg.limits);
    auto implication = [](const ImplicationCheck& ic) {
        return Json{{"binding", ic.binding}, {"holds", ic.holds}, {"witness", nullable_point(ic.witness)}};
    };
    Json list = Json::array();
    for (const auto& po : r.outcomes) {
        list.push_back(Json{{"term", format_term(po.probe)}, {"first", implication(po.first)}, {"second", implication(po.second)}});
    }
    Outcome o;
    o.report = Json{{"n", n},
                    {"alpha", alpha},
                    {"c", to_string(c)},
                    {"p", format_term(r.p_term)},
                    {"q", format_term(r.q_term)},
                    {"disjoint", r.disjoint},
                    {"probes", std::move(list)},
                    {"counterexamples", r.counterexamples}};
    o.status = r.counterexamples == 0 && r.disjoint ? exit_ok : exit_false;
    return o;
}

Outcome vlat_noiso(unsigned k, unsigned m, unsigned n, const Config& cfg) {
    const NoIsoReport r = noiso_probe(k, m, n, cfg.limits);
    auto ladder = [](const LadderCheck& lc) {
        return Json{{"lower", format_term(lc.lower)},
                    {"upper", format_term(lc.upper)},
                    {"leq", lc.decided.holds},
                    {"witness", lc.explicit_verified ? point_to_json(lc.explicit_witness) : nullable_point(lc.decided.witness)},
                    {"solver_witness", nullable_point(lc.decided.witness)},
                    {"explicit_witness", point_to_json(lc.explicit_witness)},
                    {"explicit_verified", lc.explicit_verified},
                    {"multiplier_refuted", lc.multiplier_refuted}};
    };
    const bool reproduced = !r.antitone.decided.holds && r.antitone.explicit_verified && !r.isotone.decided.holds &&
                            r.isotone.explicit_verified;
    Outcome o;
    o.report = Json{{"k", k}, {"m", m}, {"n", n}, {"antitone", ladder(r.antitone)}, {"isotone", ladder(r.isotone)},
                    {"reproduced", reproduced}};
    o.status = reproduced ? exit_ok : exit_false;
    return o;
}

void emit(const std::string& text, const Config& cfg) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write '" + cfg.output + "'");
    out << text;
}

int fail(const char* kind, const std::string& message, int status) {
    std::cerr << "devlat: " << message << "\n";
    std::cout << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deviations, monotone adjustment, separability witnesses and vector-lattice ideals"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    Config cfg;
    bool show_schema = false;
    app.add_flag("--schema", show_schema, "Print the JSON schemas of all inputs and reports");
    app.add_option("--seed", cfg.seed, "Seed for randomized runs")->capture_default_str();
    app.add_option("--max-cells", cfg.limits.max_cells, "Cell-count ceiling for semilinear sets")->capture_default_str();
    app.add_option("--max-pieces", cfg.limits.max_pieces, "Piece-count ceiling for term linearization")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "dot", "text"}))->capture_default_str();
    app.add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");

    std::function<Outcome()> action;

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Finite distributive lattices");
    lattice->require_subcommand(1);
    std::string lattice_file;
    auto* lcheck = lattice->add_subcommand("check", "Complete normality, root system of primes, 0-distributivity");
    lcheck->add_option("lattice", lattice_file, "Lattice JSON")->required();
    lcheck->callback([&] { action = [&] { return lattice_check(lattice_file, cfg); }; });

    // deviation
    auto* deviation = app.add_subcommand("deviation", "Deviations on a finite lattice");
    deviation->require_subcommand(1);
    std::string dev_lattice, dev_map;
    bool want_monotone = false, want_cevian = false, shuffle = false;
    std::size_t limit = 10;
    auto* dcheck = deviation->add_subcommand("check", "Check a table against the deviation axioms");
    dcheck->add_option("--lattice", dev_lattice)->required();
    dcheck->add_option("--map", dev_map)->required();
    dcheck->callback([&] { action = [&] { return deviation_check(dev_lattice, dev_map); }; });
    auto* dsearch = deviation->add_subcommand("search", "Find a deviation by backtracking");
    dsearch->add_option("--lattice", dev_lattice)->required();
    dsearch->add_flag("--monotone", want_monotone);
    dsearch->add_flag("--cevian", want_cevian);
    dsearch->add_flag("--shuffle", shuffle, "Try candidate values in an order drawn from --seed");
    dsearch->callback([&] { action = [&] { return deviation_search(dev_lattice, want_monotone, want_cevian, shuffle, cfg); }; });
    auto* denum = deviation->add_subcommand("enumerate", "List deviations in search order");
    denum->add_option("--lattice", dev_lattice)->required();
    denum->add_option("--limit", limit)->capture_default_str();
    denum->add_flag("--monotone", want_monotone);
    denum->add_flag("--cevian", want_cevian);
    denum->callback([&] { action = [&] { return deviation_enumerate(dev_lattice, limit, want_monotone, want_cevian); }; });

    // adjust
    auto* adj = app.add_subcommand("adjust", "Monotone adjustment of a binary map");
    std::string adj_lattice, adj_map, adj_order, adj_poset, adj_strategy = "sweep";
    adj->add_option("--lattice", adj_lattice)->required();
    adj->add_option("--map", adj_map)->required();
    adj->add_option("--order", adj_order, "Comma-separated enumeration of M (default: file order)");
    adj->add_option("--poset", adj_poset, "Domain poset M (default: the lattice itself)");
    adj->add_option("--strategy", adj_strategy)->check(CLI::IsMember({"sweep", "finitary"}))->capture_default_str();
    adj->callback([&] { action = [&] { return adjust(adj_lattice, adj_map, adj_order, adj_poset, adj_strategy); }; });

    // poset
    auto* poset = app.add_subcommand("poset", "Separability witnesses and strong amalgams");
    poset->require_subcommand(1);
    std::string poset_file, poset_order_text, witness_file;
    auto* pw = poset->add_subcommand("witness", "Witness induced by an enumeration");
    pw->add_option("poset", poset_file)->required();
    pw->add_option("--order", poset_order_text, "Comma-separated enumeration (default: file order)");
    pw->callback([&] { action = [&] { return poset_witness(poset_file, poset_order_text, cfg); }; });
    auto* po = poset->add_subcommand("order", "Block well-ordering built from a witness");
    po->add_option("poset", poset_file)->required();
    po->add_option("--witness", witness_file)->required();
    po->callback([&] { action = [&] { return poset_order(poset_file, witness_file); }; });
    auto* pa = poset->add_subcommand("amalgam", "Check a strong amalgam and glue block witnesses");
    pa->add_option("spec", poset_file)->required();
    pa->callback([&] { action = [&] { return poset_amalgam(poset_file); }; });

    // semilinear
    auto* semi = app.add_subcommand("semilinear", "Semilinear sets over the rationals");
    semi->require_subcommand(1);
    std::string set_s, set_t, shadow_vars;
    bool lower = false;
    auto* sinc = semi->add_subcommand("includes", "Decide T ⊆ S");
    sinc->add_option("S", set_s)->required();
    sinc->add_option("T", set_t)->required();
    sinc->callback([&] { action = [&] { return semilinear_includes(set_s, set_t, cfg); }; });
    auto* ssh = semi->add_subcommand("shadow", "Upper (default) or lower shadow on a variable set");
    ssh->add_option("S", set_s)->required();
    ssh->add_option("--vars", shadow_vars, "Comma-separated 0-based variable indices kept")->required();
    ssh->add_flag("--lower", lower);
    ssh->callback([&] { action = [&] { return semilinear_shadow(set_s, shadow_vars, lower, cfg); }; });

    // vlat
    auto* vlat = app.add_subcommand("vlat", "Principal ideals of free vector lattices");
    vlat->require_subcommand(1);
    std::string term_g, term_h, c_text = "1";
    std::vector<std::string> terms, probe_texts;
    std::size_t dim = 0, alpha = 1, random_count = 0;
    unsigned depth = 3, k = 0, m = 0, ncoeff = 0;
    bool omega = false;
    auto* vleq = vlat->add_subcommand("leq", "Decide <g> <= <h>");
    vleq->add_option("G", term_g, "Term g")->required();
    vleq->add_option("H", term_h, "Term h")->required();
    vleq->add_option("--n", dim, "Number of generators")->required();
    vleq->add_flag("--omega", omega, "Relative to the region Omega_n");
    vleq->callback([&] { action = [&] { return vlat_leq(term_g, term_h, dim, omega, cfg); }; });
    auto* vcev = vlat->add_subcommand("cevian", "Check the Cevian inequality on a triple");
    vcev->add_option("terms", terms)->required()->expected(3);
    vcev->add_option("--n", dim)->required();
    vcev->add_flag("--omega", omega);
    vcev->callback([&] { action = [&] { return vlat_cevian(terms, dim, omega, cfg); }; });
    auto* vps = vlat->add_subcommand("pscom-probe", "Probe the pseudocomplement pair relative to Omega_n");
    vps->add_option("--n", dim)->required();
    vps->add_option("--alpha", alpha)->capture_default_str();
    vps->add_option("--c", c_text)->capture_default_str();
    vps->add_option("--probe", probe_texts, "Probe term (repeatable)");
    vps->add_option("--random", random_count, "Number of random probe terms drawn from --seed");
    vps->add_option("--depth", depth, "Depth of random probe terms")->capture_default_str();
    vps->callback([&] { action = [&] { return vlat_pscom(dim, alpha, c_text, probe_texts, random_count, depth, cfg); }; });
    auto* vno = vlat->add_subcommand("noiso-probe", "Ladder inclusions at dimension 2 relative to Omega_2");
    vno->add_option("--k", k)->required();
    vno->add_option("--m", m)->required();
    vno->add_option("--n", ncoeff)->required();
    vno->callback([&] { action = [&] { return vlat_noiso(k, m, ncoeff, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (show_schema) {
            emit(cli::schemas().dump(2) + "\n", cfg);
            return exit_ok;
        }
        if (!action) {
            std::cerr << app.help();
            return exit_input;
        }
        const Outcome o = action();
        if (cfg.format != "json" && o.text.empty()) {
            throw InputError("--format " + cfg.format + " is not available for this command");
        }
        emit(o.text.empty() ? o.report.dump(2) + "\n" : o.text, cfg);
        return o.status;
    } catch (const InputError& e) {
        return fail("input", e.what(), exit_input);
    } catch (const ContractError& e) {
        return fail("contract", e.what(), exit_input);
    } catch (const ResourceError& e) {
        return fail("resource", e.what(), exit_resource);
    }
}
