#include <ocomp/fol.h>
#include <ocomp/syntax.h>

#include <cctype>
#include <charconv>
#include <limits>
#include <map>

namespace ocomp
{

namespace
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Lexer
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class TokenType
{
	Identifier,
	Variable,
	Number,
	Punctuation,
	End
};

struct Token
{
	TokenType type = TokenType::End;
	std::string text;
	std::size_t line = 1;
	std::size_t column = 1;
};

// longest match first
const std::vector<std::string> ProgramPunctuation =
	{":-", "..", "!=", "<=", ">=", ".", ",", "(", ")", "{", "}", "|", "+", "-", "*", "/", "\\", "=", "<", ">"};

const std::vector<std::string> SpecPunctuation =
	{"<->", "->", "<-", "!=", "<=", ">=", "..", ".", ",", "(", ")", "|", "+", "-", "*", "/", "\\", "=", "<", ">"};

std::vector<Token> tokenize(const std::string &text, const std::vector<std::string> &punctuation, bool specVariables)
{
	std::vector<Token> tokens;
	std::size_t position = 0;
	std::size_t line = 1;
	std::size_t column = 1;

	const auto advance =
		[&](std::size_t count)
		{
			for (std::size_t i = 0; i < count; i++)
			{
				if (text[position] == '\n')
				{
					line++;
					column = 1;
				}
				else
					column++;

				position++;
			}
		};

	const auto isWordCharacter =
		[](char c)
		{
			return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
		};

	while (position < text.size())
	{
		const char c = text[position];

		if (std::isspace(static_cast<unsigned char>(c)))
		{
			advance(1);
			continue;
		}

		if (c == '%')
		{
			while (position < text.size() && text[position] != '\n')
				advance(1);
			continue;
		}

		Token token;
		token.line = line;
		token.column = column;

		std::size_t end = position;

		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
				end++;
			token.type = TokenType::Number;
		}
		else if (std::islower(static_cast<unsigned char>(c)))
		{
			while (end < text.size() && isWordCharacter(text[end]))
				end++;
			token.type = TokenType::Identifier;
		}
		else if (std::isupper(static_cast<unsigned char>(c)))
		{
			while (end < text.size() && isWordCharacter(text[end]))
				end++;

			if (specVariables && end < text.size() && text[end] == '$')
			{
				end++;
				if (end < text.size() && (text[end] == 'i' || text[end] == 'g') && (end + 1 >= text.size() || !isWordCharacter(text[end + 1])))
					end++;
			}

			token.type = TokenType::Variable;
		}
		else if (c == '#')
		{
			end++;
			while (end < text.size() && isWordCharacter(text[end]))
				end++;
			token.type = TokenType::Identifier;
		}
		else
		{
			for (const auto &candidate : punctuation)
			{
				if (text.compare(position, candidate.size(), candidate) == 0)
				{
					end = position + candidate.size();
					break;
				}
			}

			if (end == position)
				throw SyntaxError(line, column, std::string("unexpected character '") + c + "'");

			token.type = TokenType::Punctuation;
		}

		token.text = text.substr(position, end - position);
		advance(end - position);
		tokens.push_back(std::move(token));
	}

	Token end;
	end.line = line;
	end.column = column;
	tokens.push_back(end);

	return tokens;
}

class TokenStream
{
	public:
		explicit TokenStream(std::vector<Token> tokens)
		:	m_tokens{std::move(tokens)}
		{
		}

		const Token &peek(std::size_t offset = 0) const
		{
			return m_tokens[std::min(m_position + offset, m_tokens.size() - 1)];
		}

		const Token &next()
		{
			const auto &token = peek();
			if (m_position + 1 < m_tokens.size())
				m_position++;
			return token;
		}

		bool atEnd() const
		{
			return peek().type == TokenType::End;
		}

		bool isPunctuation(const std::string &text, std::size_t offset = 0) const
		{
			return peek(offset).type == TokenType::Punctuation && peek(offset).text == text;
		}

		bool isKeyword(const std::string &text, std::size_t offset = 0) const
		{
			return peek(offset).type == TokenType::Identifier && peek(offset).text == text;
		}

		bool accept(const std::string &text)
		{
			if (!isPunctuation(text) && !isKeyword(text))
				return false;
			next();
			return true;
		}

		void expect(const std::string &text)
		{
			if (!accept(text))
				fail("expected '" + text + "'");
		}

		[[noreturn]] void fail(const std::string &message) const
		{
			const auto &token = peek();
			const auto found = token.type == TokenType::End ? std::string("end of input") : "'" + token.text + "'";
			throw SyntaxError(token.line, token.column, message + ", found " + found);
		}

		std::size_t position() const { return m_position; }
		void reset(std::size_t position) { m_position = position; }

	private:
		std::vector<Token> m_tokens;
		std::size_t m_position = 0;
};

std::int64_t parseNumber(const Token &token)
{
	std::int64_t value = 0;
	const auto result = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);

	if (result.ec != std::errc{})
		throw OverflowError("numeral " + token.text + " does not fit into 64 bits");

	return value;
}

std::optional<Relation> relationFromToken(const Token &token)
{
	static const std::map<std::string, Relation> relations =
	{
		{"=", Relation::Equal},
		{"!=", Relation::NotEqual},
		{"<", Relation::Less},
		{">", Relation::Greater},
		{"<=", Relation::LessEqual},
		{">=", Relation::GreaterEqual},
	};

	if (token.type != TokenType::Punctuation)
		return std::nullopt;

	const auto match = relations.find(token.text);
	if (match == relations.end())
		return std::nullopt;

	return match->second;
}

std::optional<PrecomputedTerm> specialConstant(const std::string &text)
{
	if (text == "#inf" || text == "#infimum")
		return PrecomputedTerm{Infimum{}};
	if (text == "#sup" || text == "#supremum")
		return PrecomputedTerm{Supremum{}};
	return std::nullopt;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Programs
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class ProgramParser
{
	public:
		explicit ProgramParser(const std::string &text)
		:	m_tokens{tokenize(text, ProgramPunctuation, false)}
		{
		}

		Program parse()
		{
			Program program;

			while (!m_tokens.atEnd())
				program.rules.push_back(parseRule());

			program.checkArities();
			return program;
		}

	private:
		Rule parseRule()
		{
			Rule rule;

			if (m_tokens.accept("{"))
			{
				rule.headKind = Rule::HeadKind::Choice;
				rule.head = parseAtom();
				if (m_tokens.isPunctuation(";") || m_tokens.isPunctuation(","))
					m_tokens.fail("choice rules take exactly one atom");
				m_tokens.expect("}");
			}
			else if (m_tokens.isPunctuation(":-"))
				rule.headKind = Rule::HeadKind::Constraint;
			else
			{
				rule.headKind = Rule::HeadKind::Basic;
				rule.head = parseAtom();
			}

			if (m_tokens.accept(":-"))
			{
				if (!m_tokens.isPunctuation("."))
				{
					rule.body.push_back(parseBodyElement());
					while (m_tokens.accept(","))
						rule.body.push_back(parseBodyElement());
				}
			}

			m_tokens.expect(".");
			return rule;
		}

		Atom parseAtom()
		{
			const auto &token = m_tokens.peek();

			if (token.type != TokenType::Identifier || token.text == "not" || token.text[0] == '#')
				m_tokens.fail("expected an atom");

			Atom atom;
			atom.predicate = m_tokens.next().text;

			if (m_tokens.accept("("))
			{
				atom.arguments.push_back(parseTerm());
				while (m_tokens.accept(","))
					atom.arguments.push_back(parseTerm());
				m_tokens.expect(")");
			}

			return atom;
		}

		BodyElement parseBodyElement()
		{
			if (m_tokens.isKeyword("not"))
			{
				m_tokens.next();
				Literal literal;
				literal.negationCount = 1;

				if (m_tokens.isKeyword("not"))
				{
					m_tokens.next();
					literal.negationCount = 2;
				}

				literal.atom = parseAtom();
				return literal;
			}

			// comparison if a relation follows a term, atom otherwise
			const auto start = m_tokens.position();

			if (!(m_tokens.peek().type == TokenType::Identifier && m_tokens.isPunctuation("(", 1)))
			{
				try
				{
					auto left = parseTerm();
					if (const auto relation = relationFromToken(m_tokens.peek()))
					{
						m_tokens.next();
						return Comparison{*relation, std::move(left), parseTerm()};
					}
				}
				catch (const SyntaxError &)
				{
				}

				m_tokens.reset(start);
			}

			return Literal{0, parseAtom()};
		}

		ProgramTerm parseTerm()
		{
			auto left = parseSum();

			if (m_tokens.accept(".."))
				return ProgramTerm::binary(BinaryOperator::Interval, std::move(left), parseSum());

			return left;
		}

		ProgramTerm parseSum()
		{
			auto result = parseProduct();

			while (true)
			{
				if (m_tokens.accept("+"))
					result = ProgramTerm::binary(BinaryOperator::Plus, std::move(result), parseProduct());
				else if (m_tokens.accept("-"))
					result = ProgramTerm::binary(BinaryOperator::Minus, std::move(result), parseProduct());
				else
					return result;
			}
		}

		ProgramTerm parseProduct()
		{
			auto result = parseUnary();

			while (true)
			{
				if (m_tokens.accept("*"))
					result = ProgramTerm::binary(BinaryOperator::Multiply, std::move(result), parseUnary());
				else if (m_tokens.accept("/"))
					result = ProgramTerm::binary(BinaryOperator::Divide, std::move(result), parseUnary());
				else if (m_tokens.accept("\\"))
					result = ProgramTerm::binary(BinaryOperator::Modulo, std::move(result), parseUnary());
				else
					return result;
			}
		}

		ProgramTerm parseUnary()
		{
			if (m_tokens.accept("-"))
			{
				if (m_tokens.peek().type == TokenType::Number)
				{
					const auto &token = m_tokens.next();
					if (token.text == "9223372036854775808")
						return ProgramTerm::precomputed(std::numeric_limits<std::int64_t>::min());
					return ProgramTerm::precomputed(-parseNumber(token));
				}

				return ProgramTerm::negative(parseUnary());
			}

			return parsePrimary();
		}

		ProgramTerm parsePrimary()
		{
			const auto &token = m_tokens.peek();

			switch (token.type)
			{
				case TokenType::Number:
					return ProgramTerm::precomputed(parseNumber(m_tokens.next()));
				case TokenType::Variable:
					return ProgramTerm::variable(m_tokens.next().text);
				case TokenType::Identifier:
				{
					if (const auto special = specialConstant(token.text))
					{
						m_tokens.next();
						return ProgramTerm::precomputed(*special);
					}

					if (token.text == "not" || token.text[0] == '#')
						m_tokens.fail("expected a term");

					if (m_tokens.isPunctuation("(", 1))
						m_tokens.fail("function symbols are not supported");

					return ProgramTerm::precomputed(PrecomputedTerm::symbol(m_tokens.next().text));
				}
				case TokenType::Punctuation:
				{
					if (m_tokens.accept("("))
					{
						auto term = parseTerm();
						m_tokens.expect(")");
						return term;
					}

					if (m_tokens.accept("|"))
					{
						auto term = parseTerm();
						m_tokens.expect("|");
						return ProgramTerm::absolute(std::move(term));
					}

					break;
				}
				case TokenType::End:
					break;
			}

			m_tokens.fail("expected a term");
		}

		TokenStream m_tokens;
};

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Specifications
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class SpecParser
{
	public:
		explicit SpecParser(const std::string &text)
		:	m_tokens{tokenize(text, SpecPunctuation, true)}
		{
		}

		std::vector<Formula> parse()
		{
			std::vector<Formula> formulas;

			while (!m_tokens.atEnd())
			{
				const auto &start = m_tokens.peek();
				auto formula = parseFormula();
				m_tokens.expect(".");

				const auto freeVariables = formula.freeVariables();
				if (!freeVariables.empty())
					throw SyntaxError(start.line, start.column, "formula is not closed, free variable " + freeVariables.begin()->toString());

				formulas.push_back(std::move(formula));
			}

			return formulas;
		}

	private:
		Formula parseFormula()
		{
			auto left = parseDisjunction();

			if (m_tokens.accept("->"))
				return Formula::implies(std::move(left), parseFormula());

			if (m_tokens.accept("<->"))
				return Formula::iff(std::move(left), parseDisjunction());

			while (m_tokens.accept("<-"))
				left = Formula::implies(parseDisjunction(), std::move(left), true);

			return left;
		}

		Formula parseDisjunction()
		{
			std::vector<Formula> children;
			children.push_back(parseConjunction());

			while (m_tokens.accept("or"))
				children.push_back(parseConjunction());

			if (children.size() == 1)
				return std::move(children.front());

			return Formula::disjunction(std::move(children));
		}

		Formula parseConjunction()
		{
			std::vector<Formula> children;
			children.push_back(parseUnary());

			while (m_tokens.accept("and"))
				children.push_back(parseUnary());

			if (children.size() == 1)
				return std::move(children.front());

			return Formula::conjunction(std::move(children));
		}

		Formula parseUnary()
		{
			if (m_tokens.accept("not"))
				return Formula::negation(parseUnary());

			if (m_tokens.isKeyword("forall") || m_tokens.isKeyword("exists"))
			{
				const bool universal = m_tokens.next().text == "forall";
				std::vector<Variable> variables;

				while (m_tokens.peek().type == TokenType::Variable)
					variables.push_back(variableFromToken(m_tokens.next()));

				if (variables.empty())
					m_tokens.fail("expected a variable after quantifier");

				auto body = parseUnary();

				return universal ? Formula::forall(std::move(variables), std::move(body)) : Formula::exists(std::move(variables), std::move(body));
			}

			return parsePrimary();
		}

		Formula parsePrimary()
		{
			if (m_tokens.isPunctuation("("))
			{
				// parenthesized formula or a comparison starting with a parenthesized term
				const auto start = m_tokens.position();

				try
				{
					m_tokens.next();
					auto formula = parseFormula();
					m_tokens.expect(")");

					if (!relationFromToken(m_tokens.peek()) && !isArithmeticOperator())
						return formula;
				}
				catch (const SyntaxError &)
				{
				}

				m_tokens.reset(start);
				return parseComparison();
			}

			if (m_tokens.accept("#true"))
				return Formula::top();

			if (m_tokens.accept("#false"))
				return Formula::bottom();

			const auto &token = m_tokens.peek();

			if (token.type == TokenType::Identifier && !specialConstant(token.text) && !relationFromToken(m_tokens.peek(1)) && !isArithmeticOperator(1))
			{
				if (!isIdentifier(token.text) || isReserved(token.text))
					m_tokens.fail("expected a formula");

				auto predicate = m_tokens.next().text;
				std::vector<FoTerm> arguments;

				if (m_tokens.accept("("))
				{
					arguments.push_back(parseTerm());
					while (m_tokens.accept(","))
						arguments.push_back(parseTerm());
					m_tokens.expect(")");
				}

				return Formula::atom(std::move(predicate), std::move(arguments));
			}

			return parseComparison();
		}

		static bool isReserved(const std::string &text)
		{
			return text == "and" || text == "or" || text == "not" || text == "forall" || text == "exists";
		}

		bool isArithmeticOperator(std::size_t offset = 0) const
		{
			return m_tokens.isPunctuation("+", offset) || m_tokens.isPunctuation("-", offset) || m_tokens.isPunctuation("*", offset)
				|| m_tokens.isPunctuation("/", offset) || m_tokens.isPunctuation("\\", offset) || m_tokens.isPunctuation("..", offset);
		}

		Formula parseComparison()
		{
			auto left = parseTerm();
			const auto relation = relationFromToken(m_tokens.peek());

			if (!relation)
				m_tokens.fail("expected a comparison operator");

			m_tokens.next();
			return Formula::compare(*relation, std::move(left), parseTerm());
		}

		FoTerm parseTerm()
		{
			auto result = parseProduct();

			while (true)
			{
				const auto &token = m_tokens.peek();

				if (m_tokens.accept("+"))
					result = arithmetic(FoTerm::Kind::Plus, std::move(result), parseProduct(), token);
				else if (m_tokens.accept("-"))
					result = arithmetic(FoTerm::Kind::Minus, std::move(result), parseProduct(), token);
				else if (m_tokens.isPunctuation("/") || m_tokens.isPunctuation("\\") || m_tokens.isPunctuation(".."))
					throw SyntaxError(token.line, token.column, "unknown operator '" + token.text + "' in specification");
				else
					return result;
			}
		}

		FoTerm parseProduct()
		{
			auto result = parseUnaryTerm();

			while (true)
			{
				const auto &token = m_tokens.peek();

				if (m_tokens.accept("*"))
					result = arithmetic(FoTerm::Kind::Multiply, std::move(result), parseUnaryTerm(), token);
				else if (m_tokens.isPunctuation("/") || m_tokens.isPunctuation("\\"))
					throw SyntaxError(token.line, token.column, "unknown operator '" + token.text + "' in specification");
				else
					return result;
			}
		}

		FoTerm parseUnaryTerm()
		{
			const auto &token = m_tokens.peek();

			if (m_tokens.accept("-"))
			{
				if (m_tokens.peek().type == TokenType::Number)
					return FoTerm::constantTerm(-parseNumber(m_tokens.next()));

				return arithmetic(FoTerm::Kind::Minus, FoTerm::constantTerm(0), parseUnaryTerm(), token);
			}

			const auto &primary = m_tokens.peek();

			switch (primary.type)
			{
				case TokenType::Number:
					return FoTerm::constantTerm(parseNumber(m_tokens.next()));
				case TokenType::Variable:
					return FoTerm::var(variableFromToken(m_tokens.next()));
				case TokenType::Identifier:
				{
					if (const auto special = specialConstant(primary.text))
					{
						m_tokens.next();
						return FoTerm::constantTerm(*special);
					}

					if (!isIdentifier(primary.text) || isReserved(primary.text))
						m_tokens.fail("expected a term");

					return FoTerm::constantTerm(PrecomputedTerm::symbol(m_tokens.next().text));
				}
				case TokenType::Punctuation:
				{
					if (m_tokens.accept("("))
					{
						auto term = parseTerm();
						m_tokens.expect(")");
						return term;
					}

					if (m_tokens.accept("|"))
					{
						const auto &operandToken = m_tokens.peek();
						auto term = parseTerm();
						m_tokens.expect("|");

						if (!term.isIntegerSorted())
							throw SyntaxError(operandToken.line, operandToken.column, "absolute value of a general term");

						return FoTerm::absolute(std::move(term));
					}

					break;
				}
				case TokenType::End:
					break;
			}

			m_tokens.fail("expected a term");
		}

		FoTerm arithmetic(FoTerm::Kind kind, FoTerm left, FoTerm right, const Token &token)
		{
			if (!left.isIntegerSorted() || !right.isIntegerSorted())
				throw SyntaxError(token.line, token.column, "arithmetic on a general term, use an integer variable (X$i)");

			return FoTerm::arithmetic(kind, std::move(left), std::move(right));
		}

		Variable variableFromToken(const Token &token)
		{
			const auto dollar = token.text.find('$');

			if (dollar == std::string::npos)
				return Variable{token.text, Sort::General};

			const auto suffix = token.text.substr(dollar + 1);
			return Variable{token.text.substr(0, dollar), suffix == "g" ? Sort::General : Sort::Integer};
		}

		TokenStream m_tokens;
};

}

Program parseProgram(const std::string &text)
{
	return ProgramParser{text}.parse();
}

std::vector<Formula> parseSpec(const std::string &text)
{
	return SpecParser{text}.parse();
}

}
