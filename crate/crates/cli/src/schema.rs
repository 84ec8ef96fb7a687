pub const SCHEMA: &str = r#"pkoszul input format, version 1

One declaration per line; `#` starts a comment. Vertices must be declared
before the arrows that use them; everything else may appear in any order.

  field <prime>                       default 32003; --char overrides it
  vertices <v1> <v2> ...
  arrow <name> : <source> -> <target>
  relation <term> (+|- <term>)*       homogeneous, parallel, degree >= 2
  order <arrow> <arrow> ...           optional arrow precedence, largest first
  bounds <max-hdeg> <max-ideg>        optional defaults for N and D
  module <name>                       optional module presentation block
    generator <name> : <vertex> @ <degree>
    row <term> (+|- <term>)*          first name of each term is a generator
  end

term = [coeff*]name(*name)*; paths compose left to right (`a*b` is `a`
then `b`). Arrow, generator and module names must not be all digits.

Exit status: 0 success, 1 refusal (request beyond the certified range),
2 input error.

JSON outputs, version 1 (keys in the order listed)

  every report: {"command", "bounds": {"max_hdeg", "max_ideg"}, ...}
  resolve:    "certified_to", "termination_degree",
              "betti": {"rows": [{"n", "certified",
                         "generators": [{"vertex", "degree", "count"}]}]}
  classify:   "verdict": "Koszul"|"dKoszul"|"PK"|"NotPure"|"NoFit",
              "p", "d", "certified_to", "fitting_pairs": [[p, d]],
              "termination_degree", "degrees": [[j] | null per row]
  ext:        "ext": {"rows": [{"i", "certified",
              "dims": [{"shift", "dim", "pairs": [{"source", "target", "count"}]}]}]}
  yoneda:     "i", "j", "products": [[a, b, [[c, coeff]]]], "target_dim",
              "image_dim", "surjective"; a, b, c index the dual bases of
              Ext^i, Ext^j, Ext^(i+j) in generator order
  generation: "generator_degrees", "rows": [{"i", "certified", "dim",
              "shifts", "decomposable", "new_generators": [[shift, count]]}],
              "truncated", "verdict", "betti_verdict", "agree"
  module-classify: "module", "part", "p", "d", "classification":
              {"piecewise_koszul", "p", "d", "s", "certified_to",
              "failing_row"}, "betti", "generation":
              {"generated_in_degree_zero", "rows": [[n, dim, reached]]}
  ek:         "k", "p", "d", "n_max", "structure_constants", "resolution":
              {"max_hdeg", "max_ideg", "betti", "classification"}
  arities:    "p", "d", "support", "closed_form", "consistent"
  reduced2l:  "l", "checked_to", "condition1".."condition3": {"status":
              "pass"|"fail"|"inconclusive", "level": "exact"|"feasibility",
              "detail"}, "generation_gaps": [{"n", "missing", "m_l_feasible"}]

Structure constants (shared with `ek`):
  {"char": p, "idempotents": [v...], "dims": {"k": [[dim(s,t)]]},
   "products": [[deg_a, idx_a, deg_b, idx_b, [[idx_c, coeff], ...]], ...],
   "labels": {"k": [name...]}}
  Inside a degree the basis is ordered by (source, target), then index.
"#;
