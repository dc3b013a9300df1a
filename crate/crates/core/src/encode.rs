//! CNF compilation of Ramsey-avoidance problems.
//!
//! Variables pair edges with colors: the variable for edge index e and color
//! c is `e*k + c + 1`, with edges in lexicographic order. The base encoding
//! has three clause groups per instance: every edge gets at least one color,
//! at most one color, and each monochromatic copy of a forbidden pattern is
//! excluded. Optional block Cayley clauses restrict structured colors to
//! unions of group-translate classes; optional lex-leader clauses break the
//! vertex-labeling symmetry. The two options are mutually exclusive.

use crate::graphs::{Edge, EdgeColoring, GraphError, TargetPattern};
use crate::groups::FiniteGroup;
use crate::solve::{SolveStats, SolverOutcome, SolverStatus};
use crate::util;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EncodeError {
    #[error("encoding needs at least one pattern")]
    NoPatterns,
    #[error("patterns mix arities {0} and {1}")]
    MixedArity(usize, usize),
    #[error("pattern {pattern} needs {needed} vertices but the host has {host}")]
    PatternTooLarge {
        pattern: String,
        needed: usize,
        host: usize,
    },
    #[error("host has {host} vertices but the block structure needs {blocks}*{order}+{extension}")]
    BlockSizeMismatch {
        host: usize,
        blocks: usize,
        order: usize,
        extension: usize,
    },
    #[error("structured color {color} out of range (color count {color_count})")]
    StructuredColorOutOfRange { color: usize, color_count: usize },
    #[error("block structure lists no structured colors")]
    StructuredColorsEmpty,
    #[error("block Cayley clauses are defined for graphs only (arity 2), got {0}")]
    BlockCayleyArity(usize),
    #[error("symmetry breaking cannot be combined with block Cayley clauses")]
    SymmetryWithStructure,
    #[error("generator is not a permutation of the vertex set: {0:?}")]
    NonPermutation(Vec<usize>),
    #[error("literal {lit} out of range for {variable_count} variables")]
    LiteralOutOfRange { lit: i32, variable_count: usize },
    #[error("clause contains a variable and its negation")]
    TautologicalClause,
    #[error("DIMACS parse error: {0}")]
    Dimacs(String),
    #[error("solver output parse error: {0}")]
    SolverOutput(String),
    #[error("model leaves variable {0} unassigned")]
    ModelIncomplete(usize),
    #[error("model assigns edge {edge:?} {count} colors; exactly one expected")]
    NotExactlyOneColor { edge: Edge, count: usize },
    #[error("model covers {got} variables, need {expected}")]
    ModelTooShort { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Variable map
// ---------------------------------------------------------------------------

/// Bijection between (edge, color) pairs and positive DIMACS variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableMap {
    vertex_count: usize,
    color_count: usize,
    arity: usize,
    edges: Vec<Edge>,
}

impl VariableMap {
    pub fn new(vertex_count: usize, color_count: usize, arity: usize) -> Self {
        VariableMap {
            vertex_count,
            color_count,
            arity,
            edges: util::subsets_lex(vertex_count, arity),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn variable_count(&self) -> usize {
        self.edges.len() * self.color_count
    }

    /// Variable for the edge at `edge_index` in color `color`.
    #[inline]
    pub fn variable(&self, edge_index: usize, color: usize) -> i32 {
        debug_assert!(edge_index < self.edges.len() && color < self.color_count);
        (edge_index * self.color_count + color + 1) as i32
    }

    /// Index of a sorted edge in the lexicographic edge list.
    pub fn edge_index(&self, edge: &[usize]) -> Option<usize> {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .ok()
    }

    /// Inverse of [`variable`]: (edge index, color) of a positive variable.
    #[inline]
    pub fn decode_variable(&self, var: i32) -> (usize, usize) {
        debug_assert!(var >= 1 && (var as usize) <= self.variable_count());
        let z = (var - 1) as usize;
        (z / self.color_count, z % self.color_count)
    }
}

// ---------------------------------------------------------------------------
// CNF formulas
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGroup {
    pub tag: String,
    pub start: usize,
    pub len: usize,
}

/// A clause database with named clause groups.
///
/// Clauses are stored with sorted, duplicate-free literals; tautologies are
/// rejected at insertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i32>>,
    groups: Vec<ClauseGroup>,
}

impl CnfFormula {
    pub fn new(variable_count: usize) -> Self {
        CnfFormula {
            variable_count,
            clauses: Vec::new(),
            groups: Vec::new(),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn groups(&self) -> &[ClauseGroup] {
        &self.groups
    }

    pub fn has_group(&self, tag: &str) -> bool {
        self.groups.iter().any(|g| g.tag == tag)
    }

    pub fn group_clauses<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a Vec<i32>> + 'a {
        self.groups
            .iter()
            .filter(move |g| g.tag == tag)
            .flat_map(|g| self.clauses[g.start..g.start + g.len].iter())
    }

    /// Opens a new clause group; subsequent clauses belong to it.
    pub fn begin_group(&mut self, tag: impl Into<String>) {
        self.groups.push(ClauseGroup {
            tag: tag.into(),
            start: self.clauses.len(),
            len: 0,
        });
    }

    /// Allocates a fresh auxiliary variable.
    pub fn new_variable(&mut self) -> i32 {
        self.variable_count += 1;
        self.variable_count as i32
    }

    pub fn add_clause(&mut self, mut lits: Vec<i32>) -> Result<(), EncodeError> {
        for &lit in &lits {
            if lit == 0 || lit.unsigned_abs() as usize > self.variable_count {
                return Err(EncodeError::LiteralOutOfRange {
                    lit,
                    variable_count: self.variable_count,
                });
            }
        }
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] == -w[1]) || {
            // sorted ascending puts -v before v only for ... check both orders
            let mut seen = false;
            for i in 0..lits.len() {
                if lits[i] > 0 && lits.binary_search(&-lits[i]).is_ok() {
                    seen = true;
                    break;
                }
            }
            seen
        } {
            return Err(EncodeError::TautologicalClause);
        }
        if self.groups.is_empty() {
            self.begin_group("");
        }
        self.clauses.push(lits);
        self.groups.last_mut().unwrap().len += 1;
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Encoding specs
// ---------------------------------------------------------------------------

/// Structure restriction: colorings that are block Cayley on the first
/// `block_count * |group|` vertices in each structured color, optionally
/// followed by unconstrained extension vertices.
#[derive(Debug, Clone)]
pub struct BlockStructureSpec {
    pub group: FiniteGroup,
    pub block_count: usize,
    pub structured_colors: BTreeSet<usize>,
    pub extension_count: usize,
}

impl BlockStructureSpec {
    pub fn structured_vertex_count(&self) -> usize {
        self.block_count * self.group.order()
    }

    pub fn total_vertex_count(&self) -> usize {
        self.structured_vertex_count() + self.extension_count
    }
}

/// Everything needed to build one instance.
#[derive(Debug, Clone)]
pub struct EncodingSpec {
    pub vertex_count: usize,
    pub patterns: Vec<TargetPattern>,
    pub block_structure: Option<BlockStructureSpec>,
    pub symmetry_breaking: bool,
}

impl EncodingSpec {
    pub fn plain(vertex_count: usize, patterns: Vec<TargetPattern>) -> Self {
        EncodingSpec {
            vertex_count,
            patterns,
            block_structure: None,
            symmetry_breaking: false,
        }
    }

    pub fn arity(&self) -> usize {
        self.patterns.first().map_or(2, TargetPattern::arity)
    }

    fn validate(&self) -> Result<(), EncodeError> {
        if self.patterns.is_empty() {
            return Err(EncodeError::NoPatterns);
        }
        let arity = self.arity();
        for p in &self.patterns {
            if p.arity() != arity {
                return Err(EncodeError::MixedArity(arity, p.arity()));
            }
            if p.vertex_count() > self.vertex_count {
                return Err(EncodeError::PatternTooLarge {
                    pattern: p.describe(),
                    needed: p.vertex_count(),
                    host: self.vertex_count,
                });
            }
        }
        if let Some(bs) = &self.block_structure {
            if self.symmetry_breaking {
                return Err(EncodeError::SymmetryWithStructure);
            }
            if bs.total_vertex_count() != self.vertex_count {
                return Err(EncodeError::BlockSizeMismatch {
                    host: self.vertex_count,
                    blocks: bs.block_count,
                    order: bs.group.order(),
                    extension: bs.extension_count,
                });
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

/// Compiles the avoidance problem to CNF. Satisfying assignments correspond
/// one-to-one to colorings of the complete host that avoid pattern i in
/// color i, further restricted by any block structure on the spec.
pub fn encode_ramsey(spec: &EncodingSpec) -> Result<(CnfFormula, VariableMap), EncodeError> {
    spec.validate()?;
    let n = spec.vertex_count;
    let k = spec.patterns.len();
    let varmap = VariableMap::new(n, k, spec.arity());
    let mut formula = CnfFormula::new(varmap.variable_count());

    formula.begin_group("at_least_one");
    for e in 0..varmap.edges().len() {
        formula.add_clause((0..k).map(|c| varmap.variable(e, c)).collect())?;
    }

    formula.begin_group("at_most_one");
    for e in 0..varmap.edges().len() {
        for c1 in 0..k {
            for c2 in c1 + 1..k {
                formula.add_clause(vec![-varmap.variable(e, c1), -varmap.variable(e, c2)])?;
            }
        }
    }

    for (color, pattern) in spec.patterns.iter().enumerate() {
        formula.begin_group(format!("forbid({},{color})", pattern.describe()));
        // clauses in lexicographic copy order: sort on ascending variable ids
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        crate::graphs::for_each_copy(pattern, n, |copy| {
            let mut vars: Vec<i32> = copy
                .iter()
                .map(|edge| {
                    let e = varmap.edge_index(edge).expect("copy edge in host");
                    varmap.variable(e, color)
                })
                .collect();
            vars.sort_unstable();
            clauses.push(vars);
        });
        clauses.sort_unstable();
        for vars in clauses {
            formula.add_clause(vars.into_iter().map(|v| -v).collect())?;
        }
    }

    if let Some(bs) = &spec.block_structure {
        add_block_cayley(&mut formula, &varmap, bs)?;
    }
    if spec.symmetry_breaking {
        let gens = adjacent_transpositions(n);
        add_symmetry_breaking(&mut formula, &varmap, &gens)?;
    }
    Ok((formula, varmap))
}

/// Adds the block Cayley clause schema for each structured color: within
/// every block pair, membership of the group difference g in the connection
/// set is a single decision, so any two edges realizing the same g imply one
/// another. Extension vertices receive no clauses.
pub fn add_block_cayley(
    formula: &mut CnfFormula,
    varmap: &VariableMap,
    spec: &BlockStructureSpec,
) -> Result<(), EncodeError> {
    if varmap.arity() != 2 {
        return Err(EncodeError::BlockCayleyArity(varmap.arity()));
    }
    if spec.total_vertex_count() != varmap.vertex_count() {
        return Err(EncodeError::BlockSizeMismatch {
            host: varmap.vertex_count(),
            blocks: spec.block_count,
            order: spec.group.order(),
            extension: spec.extension_count,
        });
    }
    if spec.structured_colors.is_empty() {
        return Err(EncodeError::StructuredColorsEmpty);
    }
    for &c in &spec.structured_colors {
        if c >= varmap.color_count() {
            return Err(EncodeError::StructuredColorOutOfRange {
                color: c,
                color_count: varmap.color_count(),
            });
        }
    }

    let group = &spec.group;
    let order = group.order();
    let b = spec.block_count;
    formula.begin_group("cayley");
    let mut seen: HashSet<(i32, i32)> = HashSet::new();
    let edge_var = |h: usize, gh: usize, b1: usize, b2: usize, color: usize| {
        let u = h + b1 * order;
        let v = gh + b2 * order;
        let edge = [u.min(v), u.max(v)];
        let e = varmap.edge_index(&edge).expect("structured edge in host");
        varmap.variable(e, color)
    };
    for &color in &spec.structured_colors {
        for b1 in 0..b {
            for b2 in b1..b {
                for g in 1..order {
                    for h1 in 0..order {
                        let g_h1 = group.op(g, h1);
                        if b1 == b2 {
                            // g*h = h would need g = 0, excluded above
                            assert_ne!(g_h1, h1, "loop edge from non-identity translate");
                        }
                        let antecedent = edge_var(h1, g_h1, b1, b2, color);
                        for h2 in 0..order {
                            let g_h2 = group.op(g, h2);
                            let consequent = edge_var(h2, g_h2, b1, b2, color);
                            if antecedent == consequent {
                                continue; // same underlying edge
                            }
                            if seen.insert((-antecedent, consequent)) {
                                formula.add_clause(vec![-antecedent, consequent])?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Adjacent transpositions (i, i+1): the default symmetry-breaking
/// generator set for the vertex-labeling action.
pub fn adjacent_transpositions(n: usize) -> Vec<Vec<usize>> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        })
        .collect()
}

/// Adds a lex-leader constraint per generator: the variable sequence, read
/// in variable-id order, must be lexicographically <= its image under the
/// generator's action on (edge, color) variables. Chain encoding with one
/// auxiliary variable per moved position.
pub fn add_symmetry_breaking(
    formula: &mut CnfFormula,
    varmap: &VariableMap,
    generators: &[Vec<usize>],
) -> Result<(), EncodeError> {
    if formula.has_group("cayley") {
        return Err(EncodeError::SymmetryWithStructure);
    }
    let n = varmap.vertex_count();
    for perm in generators {
        let mut check = vec![false; n];
        if perm.len() != n || {
            for &v in perm {
                if v >= n || check[v] {
                    check = Vec::new();
                    break;
                }
                check[v] = true;
            }
            check.is_empty() && n > 0
        } {
            return Err(EncodeError::NonPermutation(perm.clone()));
        }
    }

    formula.begin_group("symmetry");
    let mut image = vec![0usize; varmap.arity()];
    for perm in generators {
        // positions actually moved by the generator, in variable order
        let mut moved: Vec<(i32, i32)> = Vec::new();
        for var in 1..=varmap.variable_count() as i32 {
            let (e, c) = varmap.decode_variable(var);
            image.clear();
            image.extend(varmap.edges()[e].iter().map(|&v| perm[v]));
            image.sort_unstable();
            let e_img = varmap.edge_index(&image).expect("permuted edge exists");
            let var_img = varmap.variable(e_img, c);
            if var_img != var {
                moved.push((var, var_img));
            }
        }
        let mut prefix_eq: Option<i32> = None;
        for (idx, &(x, y)) in moved.iter().enumerate() {
            match prefix_eq {
                None => formula.add_clause(vec![-x, y])?,
                Some(eq) => formula.add_clause(vec![-eq, -x, y])?,
            }
            if idx + 1 < moved.len() {
                let next = formula.new_variable();
                match prefix_eq {
                    None => {
                        formula.add_clause(vec![-x, -y, next])?;
                        formula.add_clause(vec![x, y, next])?;
                    }
                    Some(eq) => {
                        formula.add_clause(vec![-eq, -x, -y, next])?;
                        formula.add_clause(vec![-eq, x, y, next])?;
                    }
                }
                prefix_eq = Some(next);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// DIMACS interchange
// ---------------------------------------------------------------------------

/// Standard DIMACS CNF with `c group <tag>` comments delimiting clause groups.
pub fn emit_dimacs(formula: &CnfFormula) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "p cnf {} {}",
        formula.variable_count(),
        formula.clause_count()
    );
    let mut emitted = 0;
    for group in formula.groups() {
        if !group.tag.is_empty() {
            let _ = writeln!(out, "c group {}", group.tag);
        }
        for clause in &formula.clauses()[group.start..group.start + group.len] {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            let _ = writeln!(out, "0");
            emitted += 1;
        }
    }
    debug_assert_eq!(emitted, formula.clause_count());
    out
}

/// Parses DIMACS CNF, honoring `c group` comments when present.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, EncodeError> {
    let mut formula: Option<CnfFormula> = None;
    let mut declared_clauses = 0usize;
    let mut pending: Vec<i32> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('c') {
            let comment = comment.trim();
            if let Some(tag) = comment.strip_prefix("group ") {
                if let Some(f) = formula.as_mut() {
                    f.begin_group(tag.trim());
                }
            }
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(EncodeError::Dimacs(format!("bad problem line '{line}'")));
            }
            let vars: usize = parts[2]
                .parse()
                .map_err(|_| EncodeError::Dimacs(format!("bad variable count '{}'", parts[2])))?;
            declared_clauses = parts[3]
                .parse()
                .map_err(|_| EncodeError::Dimacs(format!("bad clause count '{}'", parts[3])))?;
            formula = Some(CnfFormula::new(vars));
            continue;
        }
        let f = formula
            .as_mut()
            .ok_or_else(|| EncodeError::Dimacs("clause before problem line".to_string()))?;
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| EncodeError::Dimacs(format!("bad literal '{tok}'")))?;
            if lit == 0 {
                f.add_clause(std::mem::take(&mut pending))?;
            } else {
                pending.push(lit);
            }
        }
    }
    if !pending.is_empty() {
        return Err(EncodeError::Dimacs("unterminated clause".to_string()));
    }
    let formula = formula.ok_or_else(|| EncodeError::Dimacs("missing problem line".to_string()))?;
    if formula.clause_count() != declared_clauses {
        return Err(EncodeError::Dimacs(format!(
            "header declares {declared_clauses} clauses, found {}",
            formula.clause_count()
        )));
    }
    Ok(formula)
}

/// Parses SAT-competition solver output: an `s` status line and, for SAT,
/// `v` literal lines terminated by 0.
pub fn parse_dimacs_result(text: &str) -> Result<SolverOutcome, EncodeError> {
    let mut status: Option<SolverStatus> = None;
    let mut lits: Vec<i32> = Vec::new();
    let mut value_lines_done = false;
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("s ") {
            let parsed = match rest.trim() {
                "SATISFIABLE" => SolverStatus::Sat,
                "UNSATISFIABLE" => SolverStatus::Unsat,
                "UNKNOWN" | "INDETERMINATE" => SolverStatus::Unknown,
                other => {
                    return Err(EncodeError::SolverOutput(format!(
                        "unrecognized status '{other}'"
                    )))
                }
            };
            if status.replace(parsed).is_some() {
                return Err(EncodeError::SolverOutput("duplicate status line".into()));
            }
        } else if let Some(rest) = line.strip_prefix("v ").or(if line == "v" {
            Some("")
        } else {
            None
        }) {
            for tok in rest.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| {
                    EncodeError::SolverOutput(format!("bad value literal '{tok}'"))
                })?;
                if lit == 0 {
                    value_lines_done = true;
                } else {
                    if value_lines_done {
                        return Err(EncodeError::SolverOutput(
                            "literals after value terminator".into(),
                        ));
                    }
                    lits.push(lit);
                }
            }
        }
    }
    let status = status
        .ok_or_else(|| EncodeError::SolverOutput("missing 's' status line".to_string()))?;
    let model = if status == SolverStatus::Sat {
        let max_var = lits.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0) as usize;
        let mut assigned = vec![None; max_var];
        for &lit in &lits {
            let v = lit.unsigned_abs() as usize - 1;
            let value = lit > 0;
            if let Some(prev) = assigned[v] {
                if prev != value {
                    return Err(EncodeError::SolverOutput(format!(
                        "conflicting values for variable {}",
                        v + 1
                    )));
                }
            }
            assigned[v] = Some(value);
        }
        let mut model = Vec::with_capacity(max_var);
        for (i, slot) in assigned.into_iter().enumerate() {
            model.push(slot.ok_or(EncodeError::ModelIncomplete(i + 1))?);
        }
        Some(model)
    } else {
        None
    };
    Ok(SolverOutcome {
        status,
        model,
        stats: SolveStats::default(),
    })
}

// ---------------------------------------------------------------------------
// Models <-> colorings
// ---------------------------------------------------------------------------

/// Reads the coloring out of a model. The at-least/at-most clause groups
/// guarantee exactly one color variable per edge in any genuine model; a
/// violation signals a solver or encoding bug.
pub fn decode_model(model: &[bool], varmap: &VariableMap) -> Result<EdgeColoring, EncodeError> {
    if model.len() < varmap.variable_count() {
        return Err(EncodeError::ModelTooShort {
            expected: varmap.variable_count(),
            got: model.len(),
        });
    }
    let k = varmap.color_count();
    let mut colors = Vec::with_capacity(varmap.edges().len());
    for e in 0..varmap.edges().len() {
        let mut chosen: Option<usize> = None;
        let mut count = 0;
        for c in 0..k {
            if model[varmap.variable(e, c) as usize - 1] {
                chosen = Some(c);
                count += 1;
            }
        }
        if count != 1 {
            return Err(EncodeError::NotExactlyOneColor {
                edge: varmap.edges()[e].clone(),
                count,
            });
        }
        colors.push(chosen.unwrap() as u8);
    }
    Ok(EdgeColoring::from_colors(
        varmap.vertex_count(),
        k,
        varmap.arity(),
        colors,
    )?)
}

/// The assignment a coloring induces on the variable map.
pub fn assignment_from_coloring(coloring: &EdgeColoring, varmap: &VariableMap) -> Vec<bool> {
    let mut model = vec![false; varmap.variable_count()];
    for (e, edge) in varmap.edges().iter().enumerate() {
        let c = coloring.color_of(edge);
        model[varmap.variable(e, c) as usize - 1] = true;
    }
    model
}
