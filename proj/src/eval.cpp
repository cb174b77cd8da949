#include <ocomp/fol.h>

#include <algorithm>
#include <map>
#include <span>

namespace ocomp
{

namespace detail
{

struct CompiledTerm
{
	FoTerm::Kind kind = FoTerm::Kind::Constant;
	std::size_t slot = 0;
	PrecomputedTerm constant;
	std::size_t function = 0;
	std::vector<CompiledTerm> arguments;

	bool usesSlot(std::size_t other) const
	{
		if (kind == FoTerm::Kind::Variable)
			return slot == other;

		return std::any_of(arguments.begin(), arguments.end(), [&](const auto &argument) { return argument.usesSlot(other); });
	}
};

struct Binding
{
	std::size_t slot = 0;
	Sort sort = Sort::General;
	// value fixed by an equation in the body (exists) or antecedent (forall)
	std::optional<CompiledTerm> definition;
};

struct CompiledNode
{
	Formula::Kind kind = Formula::Kind::Bottom;
	std::size_t predicate = 0;
	Relation relation = Relation::Equal;
	std::vector<CompiledTerm> arguments;
	std::vector<CompiledNode> children;
	std::vector<Binding> bindings;
};

}

namespace
{

using detail::Binding;
using detail::CompiledNode;
using detail::CompiledTerm;

using Tuple = std::vector<PrecomputedTerm>;

struct TupleLess
{
	using is_transparent = void;

	bool operator()(std::span<const PrecomputedTerm> a, std::span<const PrecomputedTerm> b) const
	{
		return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
	}
};

using TupleSet = std::set<Tuple, TupleLess>;
using LevelTable = std::map<Tuple, std::int64_t, TupleLess>;

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Compilation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class Compiler
{
	public:
		std::vector<std::string> predicates;
		std::vector<std::string> functions;
		std::size_t slotCount = 0;
		bool hasIntegerQuantifier = false;

		CompiledNode compile(const Formula &formula)
		{
			CompiledNode node;
			node.kind = formula.kind;
			node.relation = formula.relation;

			switch (formula.kind)
			{
				case Formula::Kind::Predicate:
					node.predicate = intern(predicates, formula.predicate);
					[[fallthrough]];
				case Formula::Kind::Comparison:
					for (const auto &argument : formula.arguments)
						node.arguments.push_back(compileTerm(argument));
					return node;
				case Formula::Kind::Forall:
				case Formula::Kind::Exists:
				{
					const auto savedScope = m_scope;

					for (const auto &variable : formula.variables)
					{
						Binding binding;
						binding.slot = slotCount++;
						binding.sort = variable.sort;
						if (variable.sort == Sort::Integer)
							hasIntegerQuantifier = true;
						m_scope[variable] = binding.slot;
						node.bindings.push_back(std::move(binding));
					}

					node.children.push_back(compile(formula.body()));
					m_scope = savedScope;
					orderBindings(node);
					return node;
				}
				default:
					for (const auto &child : formula.children)
						node.children.push_back(compile(child));
					return node;
			}
		}

	private:
		static std::size_t intern(std::vector<std::string> &names, const std::string &name)
		{
			const auto match = std::find(names.begin(), names.end(), name);
			if (match != names.end())
				return static_cast<std::size_t>(match - names.begin());

			names.push_back(name);
			return names.size() - 1;
		}

		CompiledTerm compileTerm(const FoTerm &term)
		{
			CompiledTerm result;
			result.kind = term.kind;

			switch (term.kind)
			{
				case FoTerm::Kind::Variable:
				{
					const auto match = m_scope.find(term.variable);
					if (match == m_scope.end())
						throw Error("cannot evaluate a formula with free variable " + term.variable.toString());
					result.slot = match->second;
					return result;
				}
				case FoTerm::Kind::Constant:
					result.constant = term.constant;
					return result;
				case FoTerm::Kind::Function:
					result.function = intern(functions, term.function);
					break;
				default:
					break;
			}

			for (const auto &argument : term.arguments)
				result.arguments.push_back(compileTerm(argument));

			return result;
		}

		static void collectConjuncts(const CompiledNode &node, std::vector<const CompiledNode *> &conjuncts)
		{
			if (node.kind == Formula::Kind::And)
			{
				for (const auto &child : node.children)
					collectConjuncts(child, conjuncts);
				return;
			}

			conjuncts.push_back(&node);
		}

		// enumerated bindings first, then bindings fixed by equations over already known values
		static void orderBindings(CompiledNode &node)
		{
			const CompiledNode *scope = &node.children[0];

			if (node.kind == Formula::Kind::Forall)
			{
				if (scope->kind != Formula::Kind::Implies)
					return;
				scope = &scope->children[0];
			}

			std::vector<const CompiledNode *> equations;
			{
				std::vector<const CompiledNode *> conjuncts;
				collectConjuncts(*scope, conjuncts);
				for (const auto *conjunct : conjuncts)
					if (conjunct->kind == Formula::Kind::Comparison && conjunct->relation == Relation::Equal)
						equations.push_back(conjunct);
			}

			if (equations.empty())
				return;

			auto pending = node.bindings;
			std::vector<Binding> enumerated;
			std::vector<Binding> defined;

			const auto isPending =
				[&](const CompiledTerm &term)
				{
					return std::any_of(pending.begin(), pending.end(), [&](const Binding &binding) { return term.usesSlot(binding.slot); });
				};

			while (!pending.empty())
			{
				std::optional<std::size_t> chosen;

				for (std::size_t i = 0; i < pending.size() && !chosen; i++)
				{
					for (const auto *equation : equations)
					{
						for (int side = 0; side < 2 && !chosen; side++)
						{
							const auto &variable = equation->arguments[side];
							const auto &value = equation->arguments[1 - side];

							if (variable.kind != FoTerm::Kind::Variable || variable.slot != pending[i].slot || isPending(value))
								continue;

							pending[i].definition = value;
							chosen = i;
						}

						if (chosen)
							break;
					}
				}

				if (chosen)
				{
					defined.push_back(pending[*chosen]);
					pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(*chosen));
				}
				else
				{
					enumerated.push_back(pending.front());
					pending.erase(pending.begin());
				}
			}

			node.bindings = std::move(enumerated);
			node.bindings.insert(node.bindings.end(), defined.begin(), defined.end());
		}

		std::map<Variable, std::size_t> m_scope;
};

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Evaluation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class Evaluator
{
	public:
		Evaluator(const FiniteStdInterp &model, const std::vector<std::string> &predicates, const std::vector<std::string> &functions, std::size_t slotCount, EvaluationStats *stats)
		:	m_environment(slotCount),
			m_stats{stats}
		{
			m_predicates.resize(predicates.size());
			m_levels.resize(functions.size());

			std::map<std::string, std::size_t> predicateIndex;
			for (std::size_t i = 0; i < predicates.size(); i++)
				predicateIndex[predicates[i]] = i;

			const auto addAtoms =
				[&](const Interpretation &atoms)
				{
					for (const auto &atom : atoms)
						if (const auto match = predicateIndex.find(atom.predicate); match != predicateIndex.end())
							m_predicates[match->second].insert(atom.arguments);
				};

			addAtoms(model.base);
			addAtoms(model.orderFacts);

			std::map<std::string, std::size_t> functionIndex;
			for (std::size_t i = 0; i < functions.size(); i++)
				functionIndex[functions[i]] = i;

			for (const auto &[atom, level] : model.levelMap)
				if (const auto match = functionIndex.find(levelFunctionName(atom.predicate)); match != functionIndex.end())
					m_levels[match->second][atom.arguments] = level;

			std::set<PrecomputedTerm> general = model.generalDomain;
			std::set<std::int64_t> integers;

			for (const auto &value : model.generalDomain)
				if (value.isNumeral())
					integers.insert(value.numeral());

			if (model.intRange)
			{
				for (auto value = model.intRange->low; value <= model.intRange->high; value++)
				{
					integers.insert(value);
					general.insert(PrecomputedTerm{value});
					if (value == model.intRange->high)
						break;
				}

				m_hasIntegers = true;
			}

			m_general.assign(general.begin(), general.end());
			for (const auto value : integers)
				m_integers.emplace_back(value);
		}

		bool hasIntegers() const { return m_hasIntegers; }

		bool evaluate(const CompiledNode &node)
		{
			switch (node.kind)
			{
				case Formula::Kind::Predicate:
				{
					Tuple &buffer = tupleBuffer(node.arguments.size());
					for (std::size_t i = 0; i < node.arguments.size(); i++)
						buffer[i] = evaluateTerm(node.arguments[i]);

					const bool result = m_predicates[node.predicate].contains(std::span<const PrecomputedTerm>(buffer));
					m_depth--;
					return result;
				}
				case Formula::Kind::Comparison:
				{
					const auto left = evaluateTerm(node.arguments[0]);
					const auto right = evaluateTerm(node.arguments[1]);
					return holds(node.relation, precomputedCompare(left, right));
				}
				case Formula::Kind::Bottom:
					return false;
				case Formula::Kind::And:
					for (const auto &child : node.children)
						if (!evaluate(child))
							return false;
					return true;
				case Formula::Kind::Or:
					for (const auto &child : node.children)
						if (evaluate(child))
							return true;
					return false;
				case Formula::Kind::Implies:
					return !evaluate(node.children[0]) || evaluate(node.children[1]);
				case Formula::Kind::Forall:
				case Formula::Kind::Exists:
					return evaluateQuantifier(node, 0);
			}

			return false;
		}

	private:
		Tuple &tupleBuffer(std::size_t size)
		{
			if (m_buffers.size() <= m_depth)
				m_buffers.resize(m_depth + 1);

			auto &buffer = m_buffers[m_depth++];
			buffer.resize(size);
			return buffer;
		}

		bool inDomain(const PrecomputedTerm &value, Sort sort) const
		{
			if (sort == Sort::Integer)
				return value.isNumeral() && std::binary_search(m_integers.begin(), m_integers.end(), value);

			return std::binary_search(m_general.begin(), m_general.end(), value);
		}

		void noteBound()
		{
			if (m_stats)
				m_stats->boundHit = true;
		}

		bool evaluateQuantifier(const CompiledNode &node, std::size_t index)
		{
			const bool universal = node.kind == Formula::Kind::Forall;

			if (index == node.bindings.size())
				return evaluate(node.children[0]);

			const auto &binding = node.bindings[index];

			if (binding.definition)
			{
				auto value = evaluateTerm(*binding.definition);

				if (!inDomain(value, binding.sort))
				{
					if (binding.sort == Sort::Integer || value.isNumeral())
						noteBound();
					return universal;
				}

				m_environment[binding.slot] = std::move(value);
				return evaluateQuantifier(node, index + 1);
			}

			const auto &domain = binding.sort == Sort::Integer ? m_integers : m_general;

			for (std::size_t i = 0; i < domain.size(); i++)
			{
				m_environment[binding.slot] = domain[i];

				if (evaluateQuantifier(node, index + 1) != universal)
				{
					if (binding.sort == Sort::Integer && (i == 0 || i + 1 == domain.size()))
						noteBound();
					return !universal;
				}
			}

			return universal;
		}

		std::int64_t integerValue(const CompiledTerm &term)
		{
			const auto value = evaluateTerm(term);

			if (!value.isNumeral())
				throw Error("arithmetic on non-integer value " + value.toString());

			return value.numeral();
		}

		PrecomputedTerm evaluateTerm(const CompiledTerm &term)
		{
			switch (term.kind)
			{
				case FoTerm::Kind::Variable:
					return m_environment[term.slot];
				case FoTerm::Kind::Constant:
					return term.constant;
				case FoTerm::Kind::Absolute:
					return checkedAbs(integerValue(term.arguments[0]));
				case FoTerm::Kind::Plus:
					return checkedAdd(integerValue(term.arguments[0]), integerValue(term.arguments[1]));
				case FoTerm::Kind::Minus:
					return checkedSub(integerValue(term.arguments[0]), integerValue(term.arguments[1]));
				case FoTerm::Kind::Multiply:
					return checkedMul(integerValue(term.arguments[0]), integerValue(term.arguments[1]));
				case FoTerm::Kind::Function:
				{
					Tuple arguments;
					arguments.reserve(term.arguments.size());
					for (const auto &argument : term.arguments)
						arguments.push_back(evaluateTerm(argument));

					const auto &table = m_levels[term.function];
					const auto match = table.find(arguments);
					return match == table.end() ? std::int64_t{0} : match->second;
				}
			}

			return {};
		}

		std::vector<TupleSet> m_predicates;
		std::vector<LevelTable> m_levels;
		std::vector<PrecomputedTerm> m_general;
		std::vector<PrecomputedTerm> m_integers;
		bool m_hasIntegers = false;
		std::vector<PrecomputedTerm> m_environment;
		std::vector<Tuple> m_buffers;
		std::size_t m_depth = 0;
		EvaluationStats *m_stats;
};

}

CompiledFormula::CompiledFormula(const Formula &formula)
{
	Compiler compiler;
	m_root = std::make_unique<CompiledNode>(compiler.compile(formula));
	m_predicates = std::move(compiler.predicates);
	m_functions = std::move(compiler.functions);
	m_slotCount = compiler.slotCount;
	m_hasIntegerQuantifier = compiler.hasIntegerQuantifier;
}

CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula &&) noexcept = default;
CompiledFormula &CompiledFormula::operator=(CompiledFormula &&) noexcept = default;

bool CompiledFormula::evaluate(const FiniteStdInterp &model, EvaluationStats *stats) const
{
	Evaluator evaluator(model, m_predicates, m_functions, m_slotCount, stats);

	if (m_hasIntegerQuantifier && !evaluator.hasIntegers())
		throw DomainError("integer quantifier without an integer range");

	return evaluator.evaluate(*m_root);
}

bool evaluate(const Formula &formula, const FiniteStdInterp &model, EvaluationStats *stats)
{
	return CompiledFormula{formula}.evaluate(model, stats);
}

}
