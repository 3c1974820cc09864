use std::fmt;

/// A parsed fuzzy query: target table plus the boolean condition tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryAst {
    pub table: String,
    pub condition: ConditionNode,
}

/// A boolean combination of linguistic predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionNode {
    /// `attribute = "label"`
    Predicate { attribute: String, label: String },
    And(Box<ConditionNode>, Box<ConditionNode>),
    Or(Box<ConditionNode>, Box<ConditionNode>),
    Not(Box<ConditionNode>),
}

impl ConditionNode {
    pub fn predicate(attribute: impl Into<String>, label: impl Into<String>) -> Self {
        ConditionNode::Predicate {
            attribute: attribute.into(),
            label: label.into(),
        }
    }

    pub fn and(left: ConditionNode, right: ConditionNode) -> Self {
        ConditionNode::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: ConditionNode, right: ConditionNode) -> Self {
        ConditionNode::Or(Box::new(left), Box::new(right))
    }

    pub fn not(child: ConditionNode) -> Self {
        ConditionNode::Not(Box::new(child))
    }

    /// Predicates in tree order, left to right.
    pub fn predicates(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        self.collect_predicates(&mut out);
        out
    }

    fn collect_predicates<'a>(&'a self, out: &mut Vec<(&'a str, &'a str)>) {
        match self {
            ConditionNode::Predicate { attribute, label } => out.push((attribute, label)),
            ConditionNode::And(l, r) | ConditionNode::Or(l, r) => {
                l.collect_predicates(out);
                r.collect_predicates(out);
            }
            ConditionNode::Not(child) => child.collect_predicates(out),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            ConditionNode::Or(..) => 1,
            ConditionNode::And(..) => 2,
            ConditionNode::Not(..) => 3,
            ConditionNode::Predicate { .. } => 4,
        }
    }

    // Minimal parentheses: a child needs them when its operator binds looser
    // than the parent, or equally on the right of a left-associative chain.
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionNode::Predicate { attribute, label } => {
                write!(f, "({attribute} = \"{label}\")")
            }
            ConditionNode::And(l, r) => {
                self.write_child(f, l, false)?;
                write!(f, " And ")?;
                self.write_child(f, r, true)
            }
            ConditionNode::Or(l, r) => {
                self.write_child(f, l, false)?;
                write!(f, " Or ")?;
                self.write_child(f, r, true)
            }
            ConditionNode::Not(child) => {
                write!(f, "Not ")?;
                self.write_child(f, child, true)
            }
        }
    }

    fn write_child(
        &self,
        f: &mut fmt::Formatter<'_>,
        child: &ConditionNode,
        right: bool,
    ) -> fmt::Result {
        let needs_parens = child.precedence() < self.precedence()
            || (right && child.precedence() == self.precedence());
        if needs_parens {
            write!(f, "(")?;
            child.write(f)?;
            write!(f, ")")
        } else {
            child.write(f)
        }
    }
}

impl fmt::Display for ConditionNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

impl fmt::Display for QueryAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Select * From {} Where {}", self.table, self.condition)
    }
}

/// Canonical text form; re-parses to a structurally identical AST.
pub fn pretty_print(ast: &QueryAst) -> String {
    ast.to_string()
}
