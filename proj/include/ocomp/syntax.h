#ifndef OCOMP__SYNTAX_H
#define OCOMP__SYNTAX_H

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Errors
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct Error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct SyntaxError : Error
{
	SyntaxError(std::size_t line, std::size_t column, const std::string &message);

	std::size_t line;
	std::size_t column;
};

struct ArityError : Error
{
	using Error::Error;
};

struct OverflowError : Error
{
	using Error::Error;
};

// checked 64-bit arithmetic, throws OverflowError
std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedSub(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);
std::int64_t checkedAbs(std::int64_t a);
// rounding toward zero; modulo is n1 - n2 * (n1 / n2)
std::int64_t checkedDiv(std::int64_t a, std::int64_t b);
std::int64_t checkedMod(std::int64_t a, std::int64_t b);

bool isIdentifier(const std::string &name);
bool isVariableName(const std::string &name);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Precomputed terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct Infimum
{
	auto operator<=>(const Infimum &) const = default;
};

struct Supremum
{
	auto operator<=>(const Supremum &) const = default;
};

struct Symbol
{
	std::string name;

	auto operator<=>(const Symbol &) const = default;
};

// alternative order gives #inf < numerals < symbols < #sup
class PrecomputedTerm
{
	public:
		PrecomputedTerm() : m_value{std::int64_t{0}} {}
		PrecomputedTerm(Infimum value) : m_value{value} {}
		PrecomputedTerm(Supremum value) : m_value{value} {}
		PrecomputedTerm(std::int64_t value) : m_value{value} {}
		PrecomputedTerm(int value) : m_value{std::int64_t{value}} {}
		PrecomputedTerm(Symbol value) : m_value{std::move(value)} {}

		static PrecomputedTerm symbol(std::string name);

		bool isInfimum() const { return m_value.index() == 0; }
		bool isNumeral() const { return m_value.index() == 1; }
		bool isSymbol() const { return m_value.index() == 2; }
		bool isSupremum() const { return m_value.index() == 3; }

		std::int64_t numeral() const { return std::get<std::int64_t>(m_value); }
		const std::string &name() const { return std::get<Symbol>(m_value).name; }

		std::string toString() const;

		std::strong_ordering operator<=>(const PrecomputedTerm &other) const = default;
		bool operator==(const PrecomputedTerm &other) const = default;

	private:
		std::variant<Infimum, std::int64_t, Symbol, Supremum> m_value;
};

std::strong_ordering precomputedCompare(const PrecomputedTerm &a, const PrecomputedTerm &b);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Program terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class BinaryOperator
{
	Plus,
	Minus,
	Multiply,
	Divide,
	Modulo,
	Interval
};

const char *toString(BinaryOperator op);

class ProgramTerm
{
	public:
		enum class Kind
		{
			Precomputed,
			Variable,
			Absolute,
			Binary
		};

		static ProgramTerm precomputed(PrecomputedTerm value);
		static ProgramTerm variable(std::string name);
		static ProgramTerm absolute(ProgramTerm operand);
		static ProgramTerm binary(BinaryOperator op, ProgramTerm left, ProgramTerm right);
		// -t is sugar for 0 - t
		static ProgramTerm negative(ProgramTerm operand);

		Kind kind() const { return m_kind; }
		const PrecomputedTerm &value() const { return m_value; }
		const std::string &name() const { return m_name; }
		BinaryOperator op() const { return m_op; }
		const ProgramTerm &operand() const { return *m_left; }
		const ProgramTerm &left() const { return *m_left; }
		const ProgramTerm &right() const { return *m_right; }

		bool isGround() const;
		bool isPrecomputed() const { return m_kind == Kind::Precomputed; }
		void collectVariables(std::set<std::string> &variables) const;
		ProgramTerm substitute(const std::string &variable, const PrecomputedTerm &value) const;

		std::string toString() const;

		bool operator==(const ProgramTerm &other) const;

	private:
		Kind m_kind = Kind::Precomputed;
		PrecomputedTerm m_value;
		std::string m_name;
		BinaryOperator m_op = BinaryOperator::Plus;
		std::shared_ptr<const ProgramTerm> m_left;
		std::shared_ptr<const ProgramTerm> m_right;
};

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Rules and programs
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct Atom
{
	std::string predicate;
	std::vector<ProgramTerm> arguments;

	std::string toString() const;
	bool operator==(const Atom &other) const = default;
};

struct Literal
{
	int negationCount = 0;
	Atom atom;

	std::string toString() const;
	bool operator==(const Literal &other) const = default;
};

enum class Relation
{
	Equal,
	NotEqual,
	Less,
	Greater,
	LessEqual,
	GreaterEqual
};

const char *toString(Relation relation);
bool holds(Relation relation, std::strong_ordering order);

struct Comparison
{
	Relation relation = Relation::Equal;
	ProgramTerm left;
	ProgramTerm right;

	std::string toString() const;
	bool operator==(const Comparison &other) const = default;
};

using BodyElement = std::variant<Literal, Comparison>;

struct Rule
{
	enum class HeadKind
	{
		Basic,
		Choice,
		Constraint
	};

	HeadKind headKind = HeadKind::Constraint;
	// unused for constraints
	Atom head;
	std::vector<BodyElement> body;

	static Rule basic(Atom head, std::vector<BodyElement> body = {});
	static Rule choice(Atom head, std::vector<BodyElement> body = {});
	static Rule constraint(std::vector<BodyElement> body);

	std::optional<Atom> headAtom() const;
	std::vector<Literal> positiveBody() const;
	std::set<std::string> variables() const;

	std::string toString() const;
	bool operator==(const Rule &other) const = default;
};

struct Predicate
{
	std::string name;
	std::size_t arity = 0;

	std::string toString() const;
	auto operator<=>(const Predicate &) const = default;
};

struct Program
{
	std::vector<Rule> rules;

	// predicates in order of first occurrence
	std::vector<Predicate> predicates() const;
	// predicates occurring in some basic or choice head, in order of first occurrence
	std::vector<Predicate> headPredicates() const;
	// throws ArityError if a name is used with two arities
	void checkArities() const;

	std::string toString() const;
};

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Parsing
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Program parseProgram(const std::string &text);

}

#endif
