#include "cli.hpp"

#include "incalg/errors.hpp"
#include "incalg/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace incalg::cli {

namespace {

void emit(const RunConfig &cfg, const json &report, std::ostream &out)
{
	if (cfg.out.empty()) {
		out << dump(report);
		return;
	}
	std::ofstream f(cfg.out);
	if (!f)
		throw InputError("cannot write " + cfg.out);
	f << dump(report);
}

void write_file(const std::string &path, const json &j)
{
	std::ofstream f(path);
	if (!f)
		throw InputError("cannot write " + path);
	f << dump(j);
}

void require(const std::string &value, const char *flag, const RunConfig &cfg)
{
	if (value.empty())
		throw InputError(cfg.subcommand + " requires " + flag);
}

AlgebraPtr load_algebra(const RunConfig &cfg)
{
	require(cfg.poset, "--poset", cfg);
	return IncidenceAlgebra::make(read_preorder_file(cfg.poset),
	                              RingSpec::parse(cfg.ring));
}

std::vector<Preorder> target_preorders(const RunConfig &cfg)
{
	if (cfg.max_poset_size && !cfg.poset.empty())
		throw InputError("--poset and --all-posets-up-to are mutually exclusive");
	if (cfg.max_poset_size)
		return sweep_preorders(*cfg.max_poset_size);
	require(cfg.poset, "--poset or --all-posets-up-to", cfg);
	return {read_preorder_file(cfg.poset)};
}

int run_closure(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	require(cfg.poset, "--poset", cfg);
	const auto p = read_preorder_file(cfg.poset);
	json report = to_json(p);
	report["schema"] = kSchema;
	report["partial_order"] = p.is_partial_order();
	emit(cfg, report, out);
	if (cfg.summary)
		err << p.size() << " elements, " << p.relation().size() << " relations after closure"
		    << (p.is_partial_order() ? " (partial order)" : "") << "\n";
	return kPass;
}

int run_basis(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	const auto alg = load_algebra(cfg);
	json basis = json::array();
	for (std::size_t id = 0; id < alg->dimension(); ++id) {
		const auto &b = alg->basis(id);
		basis.push_back(json::array(
		    {alg->preorder().label(b.x), alg->preorder().label(b.y)}));
	}
	emit(cfg,
	     {{"schema", kSchema},
	      {"ring", alg->ring().to_string()},
	      {"dimension", alg->dimension()},
	      {"basis", basis}},
	     out);
	if (cfg.summary)
		err << "algebra over " << alg->ring().to_string() << " of dimension "
		    << alg->dimension() << "\n";
	return kPass;
}

int run_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	require(cfg.map_class, "--class", cfg);
	const auto alg = load_algebra(cfg);
	const auto cls = parse_map_class(cfg.map_class);
	const auto space = solve(alg, cls);
	if (!cfg.dump.empty())
		write_file(cfg.dump, to_json(space));
	json report = {{"schema", kSchema},
	               {"class", std::string(to_string(cls))},
	               {"ring", alg->ring().to_string()},
	               {"algebra_dimension", alg->dimension()},
	               {"dimension", space.dimension()}};
	if (is_pair_class(cls))
		report["xi_projection_dimension"] = space.xi_projection_dimension();
	emit(cfg, report, out);
	if (cfg.summary) {
		err << to_string(cls) << " over " << alg->ring().to_string() << ": dimension "
		    << space.dimension();
		if (is_pair_class(cls))
			err << " (Xi projection " << space.xi_projection_dimension() << ")";
		err << "\n";
	}
	return kPass;
}

int run_check(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	require(cfg.map_class, "--class", cfg);
	require(cfg.xi, "--xi", cfg);
	const auto alg = load_algebra(cfg);
	const auto xi = read_linear_map_file(alg, cfg.xi);
	auto tau = [&] {
		require(cfg.tau, "--tau", cfg);
		return read_linear_map_file(alg, cfg.tau);
	};

	IdentityReport report;
	const auto &c = cfg.map_class;
	if (c == "der")
		report = is_derivation(xi);
	else if (c == "jder")
		report = is_jordan_derivation(xi);
	else if (c == "gder")
		report = is_generalized_derivation({xi, tau()});
	else if (c == "gjder")
		report = is_generalized_jordan_derivation({xi, tau()});
	else if (c == "lemma1")
		report = verify_lemma1({xi, tau()});
	else if (c == "basis-ids")
		report = verify_basis_identities({xi, tau()});
	else
		throw InputError("unknown check class '" + c +
		                 "' (der, jder, gder, gjder, lemma1, basis-ids)");

	json j = to_json(report);
	j["schema"] = kSchema;
	emit(cfg, j, out);
	if (cfg.summary)
		err << report.name << ": " << (report.passed ? "passed" : "FAILED") << " ("
		    << report.instances << " instances, " << report.failures
		    << " failures)\n";
	return report.passed ? kPass : kMathFailure;
}

int run_decompose(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	require(cfg.xi, "--xi", cfg);
	require(cfg.tau, "--tau", cfg);
	const auto alg = load_algebra(cfg);
	const GenPair p{read_linear_map_file(alg, cfg.xi),
	                read_linear_map_file(alg, cfg.tau)};
	const auto cert = certify(p);
	emit(cfg, to_json(cert), out);
	if (cfg.summary)
		err << "certificate verdict: " << (cert.verdict ? "true" : "false") << "\n";
	return cert.verdict ? kPass : kMathFailure;
}

int run_verify_theorem(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	const auto ring = RingSpec::parse(cfg.ring);
	const auto preorders = target_preorders(cfg);
	const TheoremOptions options{.seed = cfg.seed,
	                             .samples = cfg.samples,
	                             .identity_suite = cfg.identity_suite};
	json reports = json::array();
	bool passed = true;
	for (const auto &p : preorders) {
		auto r = verify_theorem(p, ring, options);
		passed = passed && r.passed();
		if (cfg.summary)
			err << "poset " << to_json(p)["relations"].dump() << " over "
			    << ring.to_string() << ": " << (r.passed() ? "pass" : "FAIL")
			    << " (gjder dim " << r.spaces.gjder << ", " << r.cases.size()
			    << " certificates)\n";
		reports.push_back(to_json(r));
	}
	if (!cfg.max_poset_size) {
		emit(cfg, reports.front(), out);
	} else {
		emit(cfg,
		     {{"schema", kSchema},
		      {"kind", "verify-theorem-sweep"},
		      {"ring", ring.to_string()},
		      {"max_poset_size", *cfg.max_poset_size},
		      {"reports", reports},
		      {"passed", passed}},
		     out);
	}
	return passed ? kPass : kMathFailure;
}

int run_torsion_search(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	const auto preorders = target_preorders(cfg);
	json reports = json::array();
	std::size_t gaps = 0;
	for (const auto &p : preorders) {
		auto r = torsion_search(p);
		if (!r.spaces.dimensions_equal() || !r.spaces.jder_non_derivations.empty() ||
		    !r.gjder_not_gder.empty())
			++gaps;
		reports.push_back(to_json(r));
	}
	if (cfg.summary)
		err << "torsion-search over Z/2: " << preorders.size() << " preorders, "
		    << gaps << " with a gap\n";
	if (!cfg.max_poset_size) {
		emit(cfg, reports.front(), out);
	} else {
		emit(cfg,
		     {{"schema", kSchema},
		      {"kind", "torsion-search-sweep"},
		      {"ring", "Z/2"},
		      {"max_poset_size", *cfg.max_poset_size},
		      {"reports", reports}},
		     out);
	}
	return kPass;
}

} // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
	try {
		if (cfg.subcommand == "closure")
			return run_closure(cfg, out, err);
		if (cfg.subcommand == "basis")
			return run_basis(cfg, out, err);
		if (cfg.subcommand == "solve")
			return run_solve(cfg, out, err);
		if (cfg.subcommand == "check")
			return run_check(cfg, out, err);
		if (cfg.subcommand == "decompose")
			return run_decompose(cfg, out, err);
		if (cfg.subcommand == "verify-theorem")
			return run_verify_theorem(cfg, out, err);
		if (cfg.subcommand == "torsion-search")
			return run_torsion_search(cfg, out, err);
		err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
		return kInputError;
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const ArithmeticError &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const InvariantViolation &e) {
		err << "internal error: " << e.what() << "\n";
		return kMathFailure;
	}
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact incidence-algebra derivation toolkit"};
	app.require_subcommand(1);
	RunConfig cfg;

	auto poset_opt = [&](CLI::App *sub) {
		return sub->add_option("--poset", cfg.poset, "poset JSON file");
	};
	auto ring_opt = [&](CLI::App *sub) {
		return sub->add_option("--ring", cfg.ring, "Z, Q or Z/n")->capture_default_str();
	};
	auto common = [&](CLI::App *sub) {
		sub->add_option("--out", cfg.out, "write the report to this file");
		sub->add_flag("--summary", cfg.summary, "human-readable summary on stderr");
	};

	auto *closure = app.add_subcommand("closure", "reflexive-transitive closure");
	poset_opt(closure)->required();
	common(closure);

	auto *basis = app.add_subcommand("basis", "list the basis e_xy");
	poset_opt(basis)->required();
	ring_opt(basis);
	common(basis);

	auto *solve = app.add_subcommand("solve", "solution space of a map class");
	poset_opt(solve)->required();
	ring_opt(solve);
	solve->add_option("--class", cfg.map_class, "der, jder, gder or gjder")->required();
	solve->add_option("--dump", cfg.dump, "write the solution basis here");
	common(solve);

	auto *check = app.add_subcommand("check", "decide a map class or identity suite");
	poset_opt(check)->required();
	ring_opt(check);
	check->add_option("--xi", cfg.xi, "map JSON (Xi, or the map itself)")->required();
	check->add_option("--tau", cfg.tau, "relating map JSON");
	check->add_option("--class", cfg.map_class,
	                  "der, jder, gder, gjder, lemma1 or basis-ids")
	    ->required();
	common(check);

	auto *decompose = app.add_subcommand("decompose", "certify Xi = phi");
	poset_opt(decompose)->required();
	ring_opt(decompose);
	decompose->add_option("--xi", cfg.xi, "Xi JSON")->required();
	decompose->add_option("--tau", cfg.tau, "tau JSON")->required();
	common(decompose);

	auto *verify = app.add_subcommand("verify-theorem",
	                                  "solve, certify and compare dimensions");
	poset_opt(verify);
	ring_opt(verify);
	verify->add_option("--all-posets-up-to", cfg.max_poset_size,
	                   "sweep all preorders up to isomorphism");
	verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
	verify->add_option("--samples", cfg.samples, "random combinations per case")
	    ->capture_default_str();
	bool no_identities = false;
	verify->add_flag("--no-identities", no_identities,
	                 "skip the lemma1, idempotent and basis identity suites");
	common(verify);

	auto *torsion = app.add_subcommand("torsion-search",
	                                   "observe Der/JDer over Z/2");
	poset_opt(torsion);
	torsion->add_option("--all-posets-up-to", cfg.max_poset_size,
	                    "sweep all preorders up to isomorphism");
	common(torsion);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		return app.exit(e, out, err) == 0 ? kPass : kInputError;
	}

	cfg.identity_suite = !no_identities;
	cfg.subcommand = app.get_subcommands().front()->get_name();
	return run(cfg, out, err);
}

} // namespace incalg::cli
