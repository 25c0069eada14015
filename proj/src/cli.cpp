#include "hopf/cli.hpp"

#include "hopf/catalog.hpp"
#include "hopf/hopfstruct.hpp"
#include "hopf/io.hpp"
#include "hopf/pairing.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

namespace hopf::cli {

namespace {

using io::json;
using series::Kind;
using series::SeriesProfile;

struct CapExceeded : Error {
    using Error::Error;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cap(int fallback) {
    const char* env = std::getenv("HOPF_CAP");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("HOPF_CAP must be a nonnegative integer, got '") + env + "'");
    }
}

void check_degree(int n, int fallback_cap) {
    if (n < 1) throw DomainError("--max-degree must be at least 1");
    const int limit = cap(fallback_cap);
    if (n > limit)
        throw CapExceeded("--max-degree " + std::to_string(n) + " exceeds the cap " + std::to_string(limit) +
                          " (set HOPF_CAP to raise it)");
}

SeriesProfile to_r(const SeriesProfile& x) {
    switch (x.kind) {
        case Kind::R: return x;
        case Kind::P: return series::r_from_p(x);
        case Kind::S: return series::r_from_s(x);
        case Kind::D: return series::r_from_d(x);
    }
    return x;
}

SeriesProfile from_r(const SeriesProfile& r, Kind to) {
    switch (to) {
        case Kind::R: return r;
        case Kind::P: return series::p_from_r(r);
        case Kind::S: return series::s_from_r(r);
        case Kind::D: return series::d_from_r(r);
    }
    return r;
}

SeriesProfile convert(const SeriesProfile& x, Kind to) {
    if (x.kind == to) return x;
    if (x.kind == Kind::P && to == Kind::S) return series::s_from_p(x);
    if (x.kind == Kind::S && to == Kind::P) return series::p_from_s(x).p;
    return from_r(to_r(x), to);
}

Kind kind_flag(const std::string& s) {
    if (s.size() != 1) throw ParseError("series kind must be one of r, p, s, d");
    return series::kind_from_letter(s[0]);
}

SeriesProfile load_series(const std::string& path) { return io::parse_series(io::read_file(path)); }

int cmd_convert(const std::string& from, const std::string& to, const std::string& input,
                std::optional<std::size_t> order, std::ostream& out) {
    const Kind kf = kind_flag(from), kt = kind_flag(to);
    auto x = load_series(input);
    if (x.kind != kf)
        throw series::KindMismatch(std::string("input series has kind ") + series::kind_letter(x.kind) +
                                   ", --from says " + series::kind_letter(kf));
    if (order) {
        if (*order < 1 || *order > x.order())
            throw DomainError("--order must be between 1 and the input order " + std::to_string(x.order()));
        x = x.truncated(*order);
    }
    emit(out, io::series_to_json(convert(x, kt)));
    return kOk;
}

int cmd_gate(const std::string& which, const std::string& input, std::ostream& out) {
    const auto r = load_series(input);
    if (r.kind != Kind::R) throw series::KindMismatch("gates take an R series");
    const auto v = which == "nck" ? series::gate_nck(r) : series::gate_free_cofree(r);
    json j{{"gate", which}};
    j.update(io::gate_to_json(v));
    emit(out, j);
    return v.pass ? kOk : kCheckFailed;
}

int cmd_tables(const std::string& which, std::size_t max_n, std::ostream& out) {
    const auto table = which == "s" ? catalog::Table::S : catalog::Table::D;
    out << catalog::to_csv(catalog::compute_table(table, max_n), max_n);
    return kOk;
}

nck::DecorationSet load_decorations(const std::string& path) {
    return path.empty() ? nck::DecorationSet::single() : io::parse_decorations(io::read_file(path));
}

json decorations_json(const nck::DecorationSet& d) {
    json j = json::array();
    for (const auto& e : d.entries()) j.push_back({{"label", e.label}, {"degree", e.degree}});
    return j;
}

int cmd_nck(int max_degree, const std::string& decorations, const std::string& mode, std::ostream& out) {
    check_degree(max_degree, kDefaultNckCap);
    const nck::Algebra alg(load_decorations(decorations));
    const structure::Analyzer an(alg);
    json j{{"mode", mode}, {"max_degree", max_degree}, {"decorations", decorations_json(alg.decorations())}};

    if (mode == "dims") {
        std::vector<Rational> r_coeffs;
        json r = json::array(), p = json::array(), s = json::array();
        for (int n = 1; n <= max_degree; ++n) {
            const auto& d = an.decomposition(n);
            r.push_back(alg.dim(n));
            p.push_back(d.primitives.dim());
            s.push_back(d.h.dim());
            r_coeffs.emplace_back(static_cast<unsigned long>(alg.dim(n)));
        }
        const SeriesProfile rp(Kind::R, r_coeffs);
        const auto pp = series::p_from_r(rp);
        bool consistent = true;
        for (int n = 1; n <= max_degree; ++n) consistent = consistent && pp.at(n) == p[n - 1].get<long>();
        j["r"] = r;
        j["p"] = p;
        j["s"] = s;
        j["p_matches_series"] = consistent;
        emit(out, j);
        return kOk;
    }

    bool pass = true;
    json degrees = json::array();
    for (int n = 1; n <= max_degree; ++n) {
        const auto& d = an.decomposition(n);
        const auto l4 = an.check_dimension_split(n);
        json e = io::decomposition_to_json(alg, d);
        e["primitives_plus_decomposables"] = l4.pass;
        pass = pass && l4.pass && d.invariants_hold();
        if (n >= 2) {
            const auto br = an.check_brackets(n);
            e["brackets_equal_core"] = br.pass;
            e["dim_brackets"] = br.dim_brackets;
            pass = pass && br.pass;
        }
        degrees.push_back(std::move(e));
    }
    j["degrees"] = degrees;
    j["pass"] = pass;
    emit(out, j);
    return pass ? kOk : kCheckFailed;
}

int cmd_pairing(int max_degree, const std::string& mode, std::ostream& out) {
    check_degree(max_degree, kDefaultPairingCap);
    const nck::Algebra alg;
    const structure::Analyzer an(alg);
    const auto st = pairing::build_pairing(an, max_degree);
    json j{{"mode", mode}, {"max_degree", max_degree}};

    if (mode == "build") {
        j["gram"] = io::gram_to_json(st);
        emit(out, j);
        return kOk;
    }
    if (mode == "verify") {
        const auto rep = pairing::verify_hopf_pairing(alg, st);
        j["report"] = io::verification_to_json(rep);
        bool pass = rep.pass();
        json orth = json::array();
        for (int n = 1; n <= max_degree; ++n) {
            const auto o = pairing::check_orthogonality(an, st, n);
            orth.push_back({{"degree", n}, {"dim_orthogonal", o.dim_orthogonal},
                            {"dim_primitives", o.dim_primitives}, {"pass", o.pass}});
            pass = pass && o.pass;
        }
        j["orthogonality"] = orth;
        j["pass"] = pass;
        emit(out, j);
        return pass ? kOk : kCheckFailed;
    }

    bool pass = true;
    json degrees = json::array();
    for (int n = 1; n <= max_degree; ++n) {
        const auto a = pairing::adapt_complement(st, n);
        degrees.push_back({{"degree", n},
                           {"dim_core", a.dim_core},
                           {"dim_m", a.dim_m},
                           {"dim_h", a.dim_h},
                           {"block_form", a.block_form},
                           {"gram", io::matrix_to_json(a.gram)}});
        pass = pass && a.block_form;
    }
    j["degrees"] = degrees;
    j["pass"] = pass;
    emit(out, j);
    return pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hopf algebra series calculus and H_NCK computations", "hopfcalc"};
    app.require_subcommand(1);

    std::string from, to, input, which, decorations, mode;
    std::size_t order = 0, max_n = catalog::kTableOrder;
    int max_degree = 0;

    auto* convert = app.add_subcommand("convert", "Convert between R, P, S and D series");
    convert->add_option("--from", from, "Input kind")->required()->check(CLI::IsMember({"r", "p", "s", "d"}));
    convert->add_option("--to", to, "Output kind")->required()->check(CLI::IsMember({"r", "p", "s", "d"}));
    convert->add_option("--input", input, "Series JSON file")->required();
    auto* order_opt = convert->add_option("--order", order, "Truncation order (default: input order)");

    auto* gate = app.add_subcommand("gate", "Realizability gate on an R series");
    gate->add_option("--which", which, "free-cofree or nck")->required()->check(CLI::IsMember({"free-cofree", "nck"}));
    gate->add_option("--input", input, "Series JSON file")->required();

    auto* tables = app.add_subcommand("tables", "CSV s- or d-table for the bundled algebras");
    tables->add_option("--which", which, "s or d")->required()->check(CLI::IsMember({"s", "d"}));
    tables->add_option("--max", max_n, "Largest n (1..8)")->check(CLI::Range(1, 8));

    auto* nck_cmd = app.add_subcommand("nck", "Dimensions and structure checks of H_NCK");
    nck_cmd->add_option("--max-degree", max_degree, "Largest degree")->required();
    nck_cmd->add_option("--decorations", decorations, "Decoration JSON file");
    nck_cmd->add_option("mode", mode, "dims or verify")->required()->check(CLI::IsMember({"dims", "verify"}));

    auto* pair_cmd = app.add_subcommand("pairing", "Self-dual Hopf pairing on H_NCK");
    pair_cmd->add_option("--max-degree", max_degree, "Largest degree")->required();
    pair_cmd->add_option("mode", mode, "build, verify or adapt")
        ->required()
        ->check(CLI::IsMember({"build", "verify", "adapt"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*convert)
            return cmd_convert(from, to, input, order_opt->count() ? std::optional(order) : std::nullopt, out);
        if (*gate) return cmd_gate(which, input, out);
        if (*tables) return cmd_tables(which, max_n, out);
        if (*nck_cmd) return cmd_nck(max_degree, decorations, mode, out);
        return cmd_pairing(max_degree, mode, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace hopf::cli
