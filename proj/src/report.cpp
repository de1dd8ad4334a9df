#include "hms/report.hpp"

#include <algorithm>
#include <sstream>

#include "hms/builtin_specs.hpp"
#include "hms/monomial_text.hpp"
#include "hms/version.hpp"

namespace hms {

namespace {

Json json_lattice_point(const LatticePoint& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(x.convert_to<long long>());
    return out;
}

Json json_rat_vector(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_string(x));
    return out;
}

Json json_int_vector(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

Json json_mask(Mask m) { return json_int_vector(mask_to_indices(m)); }

Json json_graded_dims(const GradedDims& g) {
    Json out = Json::object();
    for (const auto& [outer, inner] : g.dims) {
        Json row = Json::object();
        for (const auto& [deg, count] : inner) row[std::to_string(deg)] = count;
        out[std::to_string(outer)] = std::move(row);
    }
    return out;
}

Json json_terms(const LaurentPolySpec& spec) {
    Json terms = Json::array();
    for (const auto& t : spec.terms) {
        Json jt;
        jt["alpha"] = json_lattice_point(t.alpha);
        jt["rho"] = rational_to_string(t.rho);
        if (!t.coeff.empty()) jt["coeff"] = t.coeff;
        terms.push_back(std::move(jt));
    }
    return terms;
}

Json json_aligned(const AlignedSeries& a) {
    Json out;
    out["shift"] = a.shift;
    Json s = Json::array();
    for (long x : a.series) s.push_back(x);
    out["series"] = std::move(s);
    return out;
}

}  // namespace

Json json_subdivision(const LaurentPolySpec& spec, const Subdivision& P,
                      const DegenerationReport& report) {
    Json out;
    out["version"] = kVersion;
    out["n"] = spec.n;
    out["term_count"] = static_cast<int>(spec.terms.size());
    Json cells = Json::array();
    for (const auto& c : P.cells) cells.push_back(json_int_vector(c));
    out["cells"] = std::move(cells);
    Json hull = Json::array();
    for (const auto& h : P.hull_cells) {
        Json jh;
        jh["members"] = json_int_vector(h.members);
        jh["normal"] = json_rat_vector(h.normal);
        jh["offset"] = rational_to_string(h.offset);
        hull.push_back(std::move(jh));
    }
    out["hull"] = std::move(hull);
    Json deg;
    deg["all_cells_simplicial"] = report.all_cells_simplicial;
    deg["all_cells_unimodular"] = report.all_cells_unimodular;
    deg["vertices_exactly_A"] = report.vertices_exactly_A;
    deg["zero_in_every_maximal_cell"] = report.zero_in_every_maximal_cell;
    Json off = Json::array();
    for (const auto& c : report.offending_cells) off.push_back(json_int_vector(c));
    deg["offending_cells"] = std::move(off);
    deg["missing_terms"] = json_int_vector(report.missing_terms);
    out["degeneration"] = std::move(deg);
    return out;
}

Json json_eval(const std::vector<Rat>& xi, const TropicalValue& value, const RegionClass& cls) {
    Json out;
    out["xi"] = json_rat_vector(xi);
    out["value"] = rational_to_string(value.value);
    out["argmax"] = json_int_vector(value.argmax);
    out["on_hypersurface"] = cls.on_hypersurface;
    if (cls.on_hypersurface)
        out["region"] = nullptr;
    else
        out["region"] = cls.region;
    return out;
}

Json json_fan(const Fan& fan) {
    Json out;
    out["ambient_dim"] = fan.ambient_dim;
    Json rays = Json::array();
    for (const auto& r : fan.rays) rays.push_back(json_lattice_point(r));
    out["rays"] = std::move(rays);
    out["ray_terms"] = json_int_vector(fan.ray_terms);
    Json cones = Json::array();
    bool all_smooth = true;
    for (const auto& c : fan.cones) {
        Json jc;
        jc["rays"] = json_int_vector(c.ray_indices);
        jc["maximal"] = c.maximal;
        jc["smooth"] = c.smooth;
        if (c.maximal && !c.smooth) all_smooth = false;
        cones.push_back(std::move(jc));
    }
    out["cones"] = std::move(cones);
    out["all_maximal_smooth"] = all_smooth;
    return out;
}

Json json_polytope(const MomentPolytope& mp) {
    Json out;
    out["n"] = mp.n;
    Json facets = Json::array();
    for (const auto& f : mp.facets) {
        Json jf;
        jf["alpha"] = json_lattice_point(f.alpha);
        jf["rho"] = rational_to_string(f.rho);
        jf["term"] = f.term;
        facets.push_back(std::move(jf));
    }
    out["facets"] = std::move(facets);
    return out;
}

Json json_hw(const HwBasis& basis) {
    Json out;
    out["n"] = basis.dec.n;
    out["Q"] = json_mask(basis.dec.Q);
    out["bound"] = basis.bound;
    out["count"] = static_cast<int>(basis.elements.size());
    Json elems = Json::array();
    for (const auto& m : basis.elements) {
        Json je;
        je["monomial"] = print_monomial(m);
        je["degree"] = degree(m);
        je["doubled"] = json_int_vector(m.doubled);
        elems.push_back(std::move(je));
    }
    out["elements"] = std::move(elems);
    out["graded_dims"] = json_graded_dims(basis.graded);
    return out;
}

Json json_localized(const PantsLabel& I, const PantsLabel& J, const GradedDims& dims) {
    Json out;
    out["n"] = I.n;
    out["I"] = json_mask(I.members);
    out["J"] = json_mask(J.members);
    out["truncation"] = dims.truncation;
    out["dims"] = json_graded_dims(dims);
    return out;
}

Json json_triangle_suite(int n) {
    Json out;
    out["n"] = n;
    const auto triangles = enumerate_triangles(n);
    out["count"] = static_cast<int>(triangles.size());
    bool all_pass = true;
    Json rows = Json::array();
    for (const auto& t : triangles) {
        const auto check = check_triangle(t);
        Json jt;
        jt["I"] = json_mask(t.I);
        jt["J"] = json_mask(t.J);
        jt["K"] = json_mask(t.K);
        jt["memberships_ok"] = check.memberships_ok;
        jt["compositions_zero"] = check.compositions_zero;
        jt["class_target_is_identity"] = check.class_target_is_identity;
        jt["identity_piece_one_dimensional"] = check.identity_piece_one_dimensional;
        jt["pass"] = check.pass;
        if (!check.pass) all_pass = false;
        rows.push_back(std::move(jt));
    }
    out["all_pass"] = all_pass;
    out["triangles"] = std::move(rows);
    return out;
}

Json json_ext_dims(const MonomialModule& src, const MonomialModule& tgt, const ExtTable& table) {
    Json out;
    out["n"] = table.n;
    out["S"] = json_mask(src.S);
    out["T"] = json_mask(tgt.S);
    out["max_k"] = table.max_k;
    out["max_degree"] = table.max_degree;
    Json dims = Json::array();
    for (int k = 0; k <= table.max_k; ++k) {
        Json row;
        row["k"] = k;
        Json series = Json::array();
        for (long x : total_degree_series(table.classes[k], table.max_degree))
            series.push_back(x);
        row["series"] = std::move(series);
        row["total"] = static_cast<int>(table.classes[k].size());
        dims.push_back(std::move(row));
    }
    out["dims"] = std::move(dims);
    return out;
}

Json json_sg(const MonomialModule& src, const MonomialModule& tgt, const SgHomTable& sg) {
    Json out;
    out["n"] = sg.n;
    out["S"] = json_mask(src.S);
    out["T"] = json_mask(tgt.S);
    out["max_k"] = sg.max_k;
    out["max_degree"] = sg.max_degree;
    out["window"] = sg.window;
    for (int parity = 0; parity < 2; ++parity) {
        Json row = json_aligned(sg.stabilized[parity]);
        row["k_star"] = sg.k_star[parity];
        out[parity == 0 ? "parity_0" : "parity_1"] = std::move(row);
    }
    return out;
}

Json json_compare(const CompareReport& report) {
    Json out;
    out["n"] = report.I.n;
    out["I"] = json_mask(report.I.members);
    out["J"] = json_mask(report.J.members);
    out["max_k"] = report.max_k;
    out["max_degree"] = report.max_degree;
    out["pass"] = report.pass;
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json jr;
        jr["k"] = r.k;
        jr["pass"] = r.pass;
        jr["hw_shift"] = r.hw_shift;
        jr["ext_shift"] = r.ext_shift;
        Json hw = Json::array();
        for (long x : r.hw_aligned) hw.push_back(x);
        jr["hw_series"] = std::move(hw);
        Json ext = Json::array();
        for (long x : r.ext_aligned) ext.push_back(x);
        jr["ext_series"] = std::move(ext);
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json json_compare_all(int n, int max_k, int max_degree) {
    Json out;
    out["n"] = n;
    out["max_k"] = max_k;
    out["max_degree"] = max_degree;
    bool pass = true;
    Json pairs = Json::array();
    for (const auto& I : canonical_labels(n))
        for (const auto& J : canonical_labels(n)) {
            const auto report = compare_hw_ext(n, I, J, max_k, max_degree);
            Json jp;
            jp["I"] = json_mask(I.members);
            jp["J"] = json_mask(J.members);
            jp["pass"] = report.pass;
            if (!report.pass) pass = false;
            pairs.push_back(std::move(jp));
        }
    out["pass"] = pass;
    out["pairs"] = std::move(pairs);
    return out;
}

Json json_square(const FunctorReport& report) {
    Json out;
    out["n"] = report.n;
    out["object_pass"] = report.object_pass;
    out["morphism_pass"] = report.morphism_pass;
    out["pass"] = report.object_pass && report.morphism_pass;
    Json objects = Json::array();
    for (const auto& row : report.objects) {
        Json jo;
        jo["label"] = json_mask(row.label);
        jo["via_restriction"] = row.via_restriction;
        jo["via_sheaf"] = row.via_sheaf;
        jo["ok"] = row.ok;
        objects.push_back(std::move(jo));
    }
    out["objects"] = std::move(objects);
    Json morphisms = Json::array();
    for (const auto& row : report.morphisms) {
        Json jm;
        jm["I"] = json_mask(row.I);
        jm["J"] = json_mask(row.J);
        jm["tuple_match"] = row.tuple_match;
        jm["series_match"] = row.series_match;
        jm["detail"] = row.detail;
        morphisms.push_back(std::move(jm));
    }
    out["morphisms"] = std::move(morphisms);
    return out;
}

Json json_fs(const FsMaps& maps) {
    Json out;
    out["n"] = maps.n;
    out["alpha0_image"] = object_name(maps.alpha0_image);
    out["alphainf_image"] = object_name(maps.alphainf_image);
    out["fs_polynomial_generators"] = maps.fs_polynomial_generators;
    out["triangle_found"] = maps.triangle_found;
    if (maps.triangle_found) {
        Json jt;
        jt["I"] = json_mask(maps.triangle.I);
        jt["J"] = json_mask(maps.triangle.J);
        jt["K"] = json_mask(maps.triangle.K);
        out["triangle"] = std::move(jt);
    }
    out["rho_alphainf_zero"] = maps.rho_alphainf_zero;
    return out;
}

Json json_local_pn(int n, int d, const LocalPnDims& dims) {
    Json out;
    out["n"] = n;
    out["d"] = d;
    out["closed_form"] = dims.closed_form.str();
    out["brute_force"] = dims.brute_force.str();
    out["match"] = dims.closed_form == dims.brute_force;
    return out;
}

namespace {

bool is_pants_corpus(const LaurentPolySpec& spec) {
    if (spec.n < 1) return false;
    const auto reference = pants_spec(spec.n);
    if (spec.terms.size() != reference.terms.size()) return false;
    auto key = [](const SpecTerm& t) {
        std::ostringstream os;
        for (const auto& a : t.alpha) os << a << ",";
        os << "|" << rational_to_string(t.rho);
        return os.str();
    };
    std::vector<std::string> a, b;
    for (const auto& t : spec.terms) a.push_back(key(t));
    for (const auto& t : reference.terms) b.push_back(key(t));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void md_index_list(std::ostringstream& md, const std::vector<int>& v) {
    md << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) md << ",";
        md << v[i];
    }
    md << "}";
}

}  // namespace

FullReport build_full_report(const LaurentPolySpec& spec, const std::string& title) {
    FullReport out;
    const auto P = regular_subdivision(spec);
    const auto degen = degeneration_report(spec, P);
    const auto fan = build_fan(P, spec);
    const auto mp = moment_polytope(spec);

    out.doc["title"] = title;
    out.doc["version"] = kVersion;
    out.doc["n"] = spec.n;
    out.doc["terms"] = json_terms(spec);
    out.doc["subdivision"] = json_subdivision(spec, P, degen);
    out.doc["fan"] = json_fan(fan);
    out.doc["polytope"] = json_polytope(mp);

    const bool pants = is_pants_corpus(spec);
    const int hw_bound = 8;
    const int compare_max_k = 6;
    const int compare_max_degree = 10;
    Json bounds;
    bounds["hw_doubled_degree"] = hw_bound;
    bounds["compare_max_k"] = compare_max_k;
    bounds["compare_max_degree"] = compare_max_degree;
    out.doc["bounds"] = std::move(bounds);

    if (pants && spec.n <= 3) {
        Json tables = Json::array();
        for (const auto& I : canonical_labels(spec.n))
            for (const auto& J : canonical_labels(spec.n)) {
                const auto basis = hw_basis(I, J, hw_bound);
                Json jt;
                jt["I"] = json_mask(I.members);
                jt["J"] = json_mask(J.members);
                jt["count"] = static_cast<int>(basis.elements.size());
                jt["graded_dims"] = json_graded_dims(basis.graded);
                tables.push_back(std::move(jt));
            }
        out.doc["hw_tables"] = std::move(tables);

        const auto triangles = json_triangle_suite(spec.n);
        if (!triangles["all_pass"].get<bool>()) out.pass = false;
        out.doc["triangles"] = triangles;

        if (spec.n <= 2) {
            const auto comparison = json_compare_all(spec.n, compare_max_k, compare_max_degree);
            if (!comparison["pass"].get<bool>()) out.pass = false;
            out.doc["comparison"] = comparison;
        }
    }
    out.doc["pass"] = out.pass;

    std::ostringstream md;
    md << "# " << title << "\n\n";
    md << "toolkit version " << kVersion << "\n\n";
    md << "## Input\n\n";
    md << "- n = " << spec.n << ", " << spec.terms.size() << " terms\n";
    for (const auto& t : spec.terms) {
        md << "- alpha (";
        for (std::size_t i = 0; i < t.alpha.size(); ++i) {
            if (i) md << ",";
            md << t.alpha[i];
        }
        md << "), rho " << rational_to_string(t.rho);
        if (!t.coeff.empty()) md << ", coeff " << t.coeff;
        md << "\n";
    }
    md << "\n## Regular subdivision\n\n";
    md << "- maximal cells:";
    for (const auto& c : P.cells) {
        md << " ";
        md_index_list(md, c);
    }
    md << "\n";
    md << "- all cells simplicial: " << yes_no(degen.all_cells_simplicial) << "\n";
    md << "- all cells unimodular: " << yes_no(degen.all_cells_unimodular) << "\n";
    md << "- vertices exactly the exponent set: " << yes_no(degen.vertices_exactly_A) << "\n";
    md << "- zero in every maximal cell: " << yes_no(degen.zero_in_every_maximal_cell) << "\n";
    md << "\n## Mirror fan\n\n";
    md << "- ambient dimension " << fan.ambient_dim << "\n";
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        md << "- ray " << i << " = (";
        for (std::size_t j = 0; j < fan.rays[i].size(); ++j) {
            if (j) md << ",";
            md << fan.rays[i][j];
        }
        md << ") from term " << fan.ray_terms[i] << "\n";
    }
    for (const auto& c : fan.cones) {
        md << "- cone ";
        md_index_list(md, c.ray_indices);
        md << " smooth: " << yes_no(c.smooth) << "\n";
    }
    md << "\n## Moment polytope\n\n";
    for (const auto& f : mp.facets) {
        md << "- eta >= <(";
        for (std::size_t j = 0; j < f.alpha.size(); ++j) {
            if (j) md << ",";
            md << f.alpha[j];
        }
        md << "), xi> - " << rational_to_string(f.rho) << " (term " << f.term << ")\n";
    }
    if (pants && spec.n <= 3) {
        md << "\n## Morphism tables\n\n";
        md << "Graded dimension counts to doubled degree " << hw_bound
           << " for every ordered pair of canonical labels.\n\n";
        for (const auto& entry : out.doc["hw_tables"]) {
            md << "- I=";
            md << entry["I"].dump();
            md << " J=" << entry["J"].dump() << ": " << entry["count"].get<int>()
               << " basis elements\n";
        }
        md << "\n## Triangle suite\n\n";
        md << "- triangles: " << out.doc["triangles"]["count"].get<int>() << "\n";
        md << "- all pass: " << yes_no(out.doc["triangles"]["all_pass"].get<bool>()) << "\n";
        if (spec.n <= 2) {
            md << "\n## Comparison matrix\n\n";
            md << "- max_k " << compare_max_k << ", max_degree " << compare_max_degree << "\n";
            md << "- all pairs pass: " << yes_no(out.doc["comparison"]["pass"].get<bool>())
               << "\n";
        }
    }
    md << "\n## Verdict\n\n";
    md << "- pass: " << yes_no(out.pass) << "\n";
    out.markdown = md.str();
    return out;
}

}  // namespace hms
