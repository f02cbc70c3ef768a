#include "incalg/io.hpp"

#include "incalg/errors.hpp"

#include <fstream>
#include <sstream>

namespace incalg {

namespace {

const json &member(const json &j, const char *key, const char *context)
{
	if (!j.is_object() || !j.contains(key))
		throw InputError(std::string(context) + ": missing \"" + key + "\"");
	return j.at(key);
}

std::string as_label(const json &j, const char *context)
{
	if (!j.is_string())
		throw InputError(std::string(context) + ": labels must be strings, got " +
		                 j.dump());
	return j.get<std::string>();
}

Scalar scalar_from_json(const RingSpec &ring, const json &j)
{
	if (j.is_string())
		return Scalar::parse(ring, j.get<std::string>());
	if (j.is_number_integer())
		return Scalar::from_int(ring, j.get<long>());
	throw InputError("coefficients must be strings or integers, got " + j.dump());
}

json pair_json(const IncidenceAlgebra &alg, std::size_t id)
{
	const auto &b = alg.basis(id);
	return json::array({alg.preorder().label(b.x), alg.preorder().label(b.y)});
}

std::size_t basis_from_json(const IncidenceAlgebra &alg, const json &j,
                            const char *context)
{
	if (!j.is_array() || j.size() != 2)
		throw InputError(std::string(context) + ": expected [x, y], got " + j.dump());
	return alg.basis_id(as_label(j[0], context), as_label(j[1], context));
}

json labelled_preorder(const Preorder &p)
{
	json j = to_json(p);
	j["partial_order"] = p.is_partial_order();
	return j;
}

} // namespace

Preorder preorder_from_json(const json &j)
{
	const auto &elems = member(j, "elements", "poset");
	if (!elems.is_array())
		throw InputError("poset: \"elements\" must be an array");
	std::vector<std::string> elements;
	for (const auto &e : elems)
		elements.push_back(as_label(e, "poset elements"));

	std::vector<LabelPair> pairs;
	if (j.contains("relations")) {
		const auto &rels = j.at("relations");
		if (!rels.is_array())
			throw InputError("poset: \"relations\" must be an array");
		for (const auto &r : rels) {
			if (!r.is_array() || r.size() != 2)
				throw InputError("poset: relation must be [x, y], got " + r.dump());
			pairs.emplace_back(as_label(r[0], "poset relations"),
			                   as_label(r[1], "poset relations"));
		}
	}
	return Preorder::closure(std::move(elements), pairs);
}

json to_json(const Preorder &p)
{
	json rels = json::array();
	for (const auto &[x, y] : p.relation_labels())
		rels.push_back(json::array({x, y}));
	return {{"elements", p.elements()}, {"relations", rels}};
}

json to_json(const Scalar &s) { return s.to_string(); }

json to_json(const IncidenceElement &f)
{
	const auto &alg = *f.algebra();
	json out = json::array();
	for (const auto &[id, c] : f.terms()) {
		const auto &b = alg.basis(id);
		out.push_back(json::array(
		    {alg.preorder().label(b.x), alg.preorder().label(b.y), c.to_string()}));
	}
	return out;
}

IncidenceElement element_from_json(const AlgebraPtr &algebra, const json &j)
{
	if (!j.is_array())
		throw InputError("element must be a list of [x, y, coef], got " + j.dump());
	IncidenceElement f(algebra);
	for (const auto &t : j) {
		if (!t.is_array() || t.size() != 3)
			throw InputError("element term must be [x, y, coef], got " + t.dump());
		auto id = algebra->basis_id(as_label(t[0], "element term"),
		                            as_label(t[1], "element term"));
		f.add_term(id, scalar_from_json(algebra->ring(), t[2]));
	}
	return f;
}

json to_json(const LinearMap &m)
{
	const auto &alg = *m.algebra();
	json images = json::array();
	for (std::size_t id = 0; id < alg.dimension(); ++id)
		images.push_back({{"from", pair_json(alg, id)}, {"to", to_json(m.image(id))}});
	return {{"ring", alg.ring().to_string()}, {"images", images}};
}

LinearMap linear_map_from_json(const AlgebraPtr &algebra, const json &j)
{
	if (!j.is_object())
		throw InputError("linear map must be a JSON object");
	if (j.contains("ring")) {
		const auto ring = RingSpec::parse(as_label(j.at("ring"), "linear map ring"));
		if (!(ring == algebra->ring()))
			throw InputError("linear map ring " + ring.to_string() +
			                 " does not match " + algebra->ring().to_string());
	}
	LinearMap m(algebra);
	std::vector<char> seen(algebra->dimension(), 0);
	const auto &images = member(j, "images", "linear map");
	if (!images.is_array())
		throw InputError("linear map: \"images\" must be an array");
	for (const auto &img : images) {
		const auto from = basis_from_json(*algebra, member(img, "from", "image"),
		                                  "image \"from\"");
		if (seen[from])
			throw InputError("linear map lists " + algebra->basis_name(from) +
			                 " twice");
		seen[from] = 1;
		m.set_image(from, element_from_json(algebra, member(img, "to", "image")));
	}
	return m;
}

json to_json(const IdentityReport &r)
{
	json witnesses = json::array();
	for (const auto &w : r.witnesses)
		witnesses.push_back({{"identity", w.identity},
		                     {"inputs", w.inputs},
		                     {"left", w.left},
		                     {"right", w.right}});
	json out = {{"name", r.name},
	            {"passed", r.passed},
	            {"instances", r.instances},
	            {"failures", r.failures},
	            {"witnesses", witnesses}};
	if (!r.observations.empty()) {
		json obs = json::array();
		for (const auto &o : r.observations)
			obs.push_back(to_json(o));
		out["observations"] = obs;
	}
	return out;
}

json to_json(const CRelationReport &r)
{
	json instances = json::array();
	for (const auto &i : r.instances)
		instances.push_back({{"relation", i.relation},
		                     {"indices", i.indices},
		                     {"left", i.left.to_string()},
		                     {"right", i.right.to_string()},
		                     {"equal", i.equal}});
	return {{"passed", r.passed()}, {"instances", instances}};
}

json to_json(const DecompositionCertificate &c)
{
	json checks = json::array();
	for (const auto &r : c.checks)
		checks.push_back(to_json(r));
	return {{"schema", kSchema},
	        {"verdict", c.verdict},
	        {"xi", to_json(c.input.xi)},
	        {"tau", to_json(c.input.tau)},
	        {"phi", to_json(c.phi)},
	        {"d", to_json(c.d)},
	        {"d_from_tau", to_json(c.d_from_tau)},
	        {"psi", to_json(c.psi)},
	        {"c_relations", to_json(verify_c_relations(c.input.tau))},
	        {"checks", checks}};
}

json to_json(const SpaceComparison &c)
{
	return {{"algebra_dimension", c.algebra_dimension},
	        {"der", c.der},
	        {"jder", c.jder},
	        {"gder", c.gder},
	        {"gjder", c.gjder},
	        {"gder_xi_projection", c.gder_xi},
	        {"gjder_xi_projection", c.gjder_xi},
	        {"two_torsion_free", c.two_torsion_free},
	        {"dimensions_equal", c.dimensions_equal()},
	        {"jder_non_derivations", c.jder_non_derivations},
	        {"passed", c.passed()}};
}

json to_json(const SolutionSpace &s)
{
	json basis = json::array();
	for (std::size_t i = 0; i < s.dimension(); ++i) {
		if (is_pair_class(s.map_class)) {
			auto p = s.pair(i);
			basis.push_back({{"xi", to_json(p.xi)}, {"tau", to_json(p.tau)}});
		} else {
			basis.push_back(to_json(s.map(i)));
		}
	}
	return {{"schema", kSchema},
	        {"class", std::string(to_string(s.map_class))},
	        {"ring", s.algebra->ring().to_string()},
	        {"dimension", s.dimension()},
	        {"basis", basis}};
}

json to_json(const TheoremReport &r)
{
	json cases = json::array();
	for (const auto &c : r.cases)
		cases.push_back({{"label", c.label},
		                 {"verdict", c.verdict},
		                 {"psi_zero", c.psi_zero},
		                 {"routes_agree", c.routes_agree},
		                 {"failed_checks", c.failed_checks}});
	return {{"schema", kSchema},
	        {"kind", "verify-theorem"},
	        {"poset", labelled_preorder(r.preorder)},
	        {"ring", r.ring.to_string()},
	        {"seed", r.options.seed},
	        {"samples", r.options.samples},
	        {"spaces", to_json(r.spaces)},
	        {"gder_expected", r.gder_expected},
	        {"corollary_holds", r.corollary_holds()},
	        {"gder_structure_holds", r.gder_structure_holds()},
	        {"all_certified", r.all_certified()},
	        {"cases", cases},
	        {"passed", r.passed()}};
}

json to_json(const TorsionReport &r)
{
	return {{"schema", kSchema},
	        {"kind", "torsion-search"},
	        {"poset", labelled_preorder(r.preorder)},
	        {"ring", r.ring.to_string()},
	        {"spaces", to_json(r.spaces)},
	        {"gjder_not_gder", r.gjder_not_gder}};
}

json read_json_file(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open " + path.string());
	std::stringstream buf;
	buf << in.rdbuf();
	try {
		return json::parse(buf.str());
	} catch (const json::parse_error &e) {
		throw InputError(path.string() + ": malformed JSON at byte " +
		                 std::to_string(e.byte) + ": " + e.what());
	}
}

Preorder read_preorder_file(const std::filesystem::path &path)
{
	try {
		return preorder_from_json(read_json_file(path));
	} catch (const json::exception &e) {
		throw InputError(path.string() + ": " + e.what());
	}
}

LinearMap read_linear_map_file(const AlgebraPtr &algebra,
                               const std::filesystem::path &path)
{
	try {
		return linear_map_from_json(algebra, read_json_file(path));
	} catch (const json::exception &e) {
		throw InputError(path.string() + ": " + e.what());
	}
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace incalg
