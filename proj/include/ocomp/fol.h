#ifndef OCOMP__FOL_H
#define OCOMP__FOL_H

#include <ocomp/syntax.h>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Two-sorted first-order formulas
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class Sort
{
	General,
	Integer
};

struct Variable
{
	std::string name;
	Sort sort = Sort::General;

	// I$i for integer variables
	std::string toString() const;
	auto operator<=>(const Variable &) const = default;
};

struct FoTerm
{
	enum class Kind
	{
		Variable,
		Constant,
		Absolute,
		Plus,
		Minus,
		Multiply,
		// lvl_p(args), integer valued
		Function
	};

	Kind kind = Kind::Constant;
	Variable variable;
	PrecomputedTerm constant;
	std::string function;
	std::vector<FoTerm> arguments;

	static FoTerm var(Variable variable);
	static FoTerm var(std::string name, Sort sort = Sort::General);
	static FoTerm constantTerm(PrecomputedTerm value);
	static FoTerm absolute(FoTerm operand);
	static FoTerm arithmetic(Kind kind, FoTerm left, FoTerm right);
	static FoTerm apply(std::string function, std::vector<FoTerm> arguments);

	bool isIntegerSorted() const;
	bool contains(const Variable &variable) const;
	void collectVariables(std::set<Variable> &variables) const;

	std::string toString() const;
	bool operator==(const FoTerm &other) const = default;
};

struct Formula
{
	enum class Kind
	{
		Predicate,
		Comparison,
		Bottom,
		// Top is printed for an empty conjunction
		And,
		Or,
		Implies,
		Forall,
		Exists
	};

	Kind kind = Kind::Bottom;
	// Predicate
	std::string predicate;
	std::vector<FoTerm> arguments;
	// Comparison, arguments hold the two sides
	Relation relation = Relation::Equal;
	// And, Or, Implies (antecedent, consequent), quantifiers (body)
	std::vector<Formula> children;
	std::vector<Variable> variables;
	// print an implication as "consequent <- antecedent"
	bool reversed = false;

	static Formula atom(std::string predicate, std::vector<FoTerm> arguments = {});
	static Formula compare(Relation relation, FoTerm left, FoTerm right);
	static Formula bottom();
	static Formula top();
	static Formula conjunction(std::vector<Formula> children);
	static Formula disjunction(std::vector<Formula> children);
	static Formula implies(Formula antecedent, Formula consequent, bool reversed = false);
	static Formula negation(Formula formula);
	static Formula iff(Formula left, Formula right);
	// empty variable lists return the body unchanged
	static Formula forall(std::vector<Variable> variables, Formula body);
	static Formula exists(std::vector<Variable> variables, Formula body);

	bool isTop() const { return kind == Kind::And && children.empty(); }
	bool isBottom() const { return kind == Kind::Bottom; }
	bool isNegation() const { return kind == Kind::Implies && children[1].isBottom(); }
	bool isQuantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }

	const Formula &left() const { return children[0]; }
	const Formula &right() const { return children[1]; }
	const Formula &body() const { return children[0]; }

	std::set<Variable> freeVariables() const;
	std::size_t nodeCount() const;

	std::string toString() const;
	bool operator==(const Formula &other) const = default;
};

// capture-avoiding substitution of a free variable
Formula substitute(const Formula &formula, const Variable &variable, const FoTerm &term);
FoTerm substitute(const FoTerm &term, const Variable &variable, const FoTerm &replacement);
// names of all variables occurring anywhere, bound or free
void collectAllVariableNames(const Formula &formula, std::set<std::string> &names);
// renames bound variables to X1, X2, ... in order of appearance
Formula canonicalRenaming(const Formula &formula);

std::vector<Formula> parseSpec(const std::string &text);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Ground atoms and interpretations
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct GroundAtom
{
	std::string predicate;
	std::vector<PrecomputedTerm> arguments;

	std::string toString() const;
	auto operator<=>(const GroundAtom &) const = default;
};

using Interpretation = std::set<GroundAtom>;

std::string toString(const Interpretation &interpretation);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Signatures and finite standard interpretations
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string orderPredicateName(const std::string &p, const std::string &q);
std::string levelFunctionName(const std::string &p);

enum class SignatureExt
{
	Sigma0,
	SigmaOrder,
	SigmaLevel
};

struct IntRange
{
	std::int64_t low = 0;
	std::int64_t high = 0;
};

struct DomainError : Error
{
	using Error::Error;
};

struct FiniteStdInterp
{
	Interpretation base;
	std::set<PrecomputedTerm> generalDomain;
	std::optional<IntRange> intRange;
	// atoms over less_p_q predicates; absent facts are false
	Interpretation orderFacts;
	// keyed by the atom p(args); absent entries read as 0
	std::map<GroundAtom, std::int64_t> levelMap;
};

struct Extras
{
	std::set<PrecomputedTerm> generalDomain;
	std::optional<IntRange> intRange;
	std::optional<Interpretation> orderFacts;
	std::optional<std::map<GroundAtom, std::int64_t>> levelMap;
};

FiniteStdInterp extendStandard(const Interpretation &interpretation, SignatureExt ext, Extras extras);
FiniteStdInterp restrict(const FiniteStdInterp &model);
const Interpretation &atomsOf(const FiniteStdInterp &model);

struct EvaluationStats
{
	// some integer quantifier was decided at the edge of the range or needed a value outside it
	bool boundHit = false;
};

bool evaluate(const Formula &formula, const FiniteStdInterp &model, EvaluationStats *stats = nullptr);

namespace detail
{
struct CompiledNode;
}

// formula prepared once for repeated evaluation
class CompiledFormula
{
	public:
		explicit CompiledFormula(const Formula &formula);
		~CompiledFormula();
		CompiledFormula(CompiledFormula &&) noexcept;
		CompiledFormula &operator=(CompiledFormula &&) noexcept;

		bool evaluate(const FiniteStdInterp &model, EvaluationStats *stats = nullptr) const;

	private:
		std::unique_ptr<detail::CompiledNode> m_root;
		std::vector<std::string> m_predicates;
		std::vector<std::string> m_functions;
		std::size_t m_slotCount = 0;
		bool m_hasIntegerQuantifier = false;
};

}

#endif
