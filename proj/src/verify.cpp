#include <ocomp/verify.h>

#include <ocomp/completion.h>
#include <ocomp/simplify.h>
#include <ocomp/tptp.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <future>
#include <regex>
#include <sstream>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// SZS status
//
////////////////////////////////////////////////////////////////////////////////////////////////////

const char *toString(SzsStatus status)
{
	switch (status)
	{
		case SzsStatus::Theorem:
			return "Theorem";
		case SzsStatus::CounterSatisfiable:
			return "CounterSatisfiable";
		case SzsStatus::Timeout:
			return "Timeout";
		case SzsStatus::GaveUp:
			return "GaveUp";
		case SzsStatus::Error:
			return "Error";
	}

	return "Error";
}

std::optional<SzsStatus> parseSzsStatus(const std::string &output)
{
	static const std::regex pattern{R"(SZS status\s+([A-Za-z]+))"};

	std::optional<SzsStatus> result;

	for (auto match = std::sregex_iterator(output.begin(), output.end(), pattern); match != std::sregex_iterator(); ++match)
	{
		const auto word = (*match)[1].str();

		if (word == "Theorem" || word == "Unsatisfiable" || word == "ContradictoryAxioms")
			result = SzsStatus::Theorem;
		else if (word == "CounterSatisfiable" || word == "Satisfiable")
			result = SzsStatus::CounterSatisfiable;
		else if (word == "Timeout")
			result = SzsStatus::Timeout;
		else if (word == "GaveUp" || word == "Unknown" || word == "ResourceOut" || word == "Inappropriate" || word == "Incomplete")
			result = SzsStatus::GaveUp;
		else
			result = SzsStatus::Error;
	}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Prover settings
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<ProverSettings> ProverSettings::fromEnvironment()
{
	const char *executable = std::getenv("OCOMP_PROVER");

	if (!executable || !*executable)
		return std::nullopt;

	ProverSettings settings;
	settings.executable = executable;

	if (const char *arguments = std::getenv("OCOMP_PROVER_ARGS"); arguments && *arguments)
	{
		std::istringstream stream{arguments};
		settings.arguments.clear();

		for (std::string argument; stream >> argument;)
			settings.arguments.push_back(argument);

		if (std::find(settings.arguments.begin(), settings.arguments.end(), "{file}") == settings.arguments.end())
			settings.arguments.push_back("{file}");
	}

	return settings;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Subprocesses
//
////////////////////////////////////////////////////////////////////////////////////////////////////

ProcessResult runProcess(const std::vector<std::string> &command, std::chrono::milliseconds timeout)
{
	if (command.empty())
		throw SpawnError("empty command");

	int pipeEnds[2];
	if (pipe(pipeEnds) != 0)
		throw SpawnError(std::string("pipe: ") + std::strerror(errno));

	const auto start = std::chrono::steady_clock::now();
	const pid_t pid = fork();

	if (pid < 0)
	{
		close(pipeEnds[0]);
		close(pipeEnds[1]);
		throw SpawnError(std::string("fork: ") + std::strerror(errno));
	}

	if (pid == 0)
	{
		setpgid(0, 0);
		dup2(pipeEnds[1], STDOUT_FILENO);
		dup2(pipeEnds[1], STDERR_FILENO);
		close(pipeEnds[0]);
		close(pipeEnds[1]);

		std::vector<char *> arguments;
		for (const auto &argument : command)
			arguments.push_back(const_cast<char *>(argument.c_str()));
		arguments.push_back(nullptr);

		execvp(arguments[0], arguments.data());
		const std::string message = "exec failed: " + command[0] + ": " + std::strerror(errno) + "\n";
		[[maybe_unused]] const auto written = write(STDERR_FILENO, message.data(), message.size());
		_exit(127);
	}

	close(pipeEnds[1]);
	fcntl(pipeEnds[0], F_SETFL, O_NONBLOCK);

	ProcessResult result;
	const auto deadline = start + timeout;
	char buffer[4096];

	for (bool open = true; open;)
	{
		const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());

		if (remaining.count() <= 0)
		{
			result.timedOut = true;
			kill(-pid, SIGKILL);
			kill(pid, SIGKILL);
			break;
		}

		pollfd descriptor{pipeEnds[0], POLLIN, 0};
		const int ready = poll(&descriptor, 1, static_cast<int>(std::min<std::int64_t>(remaining.count(), 1000)));

		if (ready < 0 && errno != EINTR)
			break;

		if (ready <= 0)
			continue;

		for (;;)
		{
			const auto count = read(pipeEnds[0], buffer, sizeof(buffer));

			if (count > 0)
				result.output.append(buffer, static_cast<std::size_t>(count));
			else
			{
				if (count == 0)
					open = false;
				break;
			}
		}
	}

	close(pipeEnds[0]);

	int status = 0;
	while (waitpid(pid, &status, 0) < 0 && errno == EINTR)
		;

	if (WIFEXITED(status))
		result.exitCode = WEXITSTATUS(status);
	else if (WIFSIGNALED(status))
		result.exitCode = 128 + WTERMSIG(status);

	result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

	if (result.exitCode == 127 && result.output.starts_with("exec failed"))
		throw SpawnError(result.output);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Verification
//
////////////////////////////////////////////////////////////////////////////////////////////////////

bool VerifyOutcome::success() const
{
	const auto proven = [](const auto &results)
	{
		return std::all_of(results.begin(), results.end(), [](const auto &result) { return result.status == SzsStatus::Theorem; });
	};

	return proven(forward) && proven(backward);
}

TheoryBundle programTheory(const Program &program, const VerifyConfig &config)
{
	auto bundle = config.bypassTightness
		? completionBundle(program, config.orderedCompletion.completeUndefined)
		: orderedCompletion(program, config.orderedCompletion);

	if (config.simplify)
		bundle = simplifyBundle(bundle);

	return bundle;
}

std::vector<NamedFormula> targetSentences(const VerifyTarget &target, const VerifyConfig &config)
{
	if (const auto *program = std::get_if<Program>(&target))
		return programTheory(*program, config).formulas();

	std::vector<NamedFormula> result;
	const auto &formulas = std::get<std::vector<Formula>>(target);

	for (std::size_t i = 0; i < formulas.size(); i++)
		result.push_back({"spec_" + std::to_string(i), formulas[i]});

	return result;
}

namespace
{

struct SubProblem
{
	std::string name;
	std::vector<NamedFormula> axioms;
	NamedFormula conjecture;
};

std::string substitutePlaceholders(std::string argument, const std::string &file, const std::string &timeout)
{
	for (const auto &[placeholder, value] : {std::pair{std::string("{file}"), file}, std::pair{std::string("{timeout}"), timeout}})
		for (auto position = argument.find(placeholder); position != std::string::npos; position = argument.find(placeholder))
			argument.replace(position, placeholder.size(), value);

	return argument;
}

ConjectureResult prove(const SubProblem &problem, const ProverSettings &prover, const std::filesystem::path &directory)
{
	TheoryBundle bundle;
	bundle.sections.push_back(TheorySection{"axioms", problem.axioms});

	ConjectureResult result;
	result.name = problem.name;
	result.conjecture = problem.conjecture.formula.toString();
	result.problemFile = directory / (problem.name + ".p");

	{
		std::ofstream file{result.problemFile};
		file << emitTptp(bundle, {NamedFormula{problem.name, problem.conjecture.formula}}).toString();
	}

	std::vector<std::string> command{prover.executable};
	for (const auto &argument : prover.arguments)
		command.push_back(substitutePlaceholders(argument, result.problemFile.string(), std::to_string(prover.timeLimit.count())));

	try
	{
		const auto process = runProcess(command, std::chrono::milliseconds{prover.timeLimit} + std::chrono::seconds{5});
		result.elapsed = process.elapsed;
		result.transcript = process.output;

		if (process.timedOut)
			result.status = SzsStatus::Timeout;
		else
			result.status = parseSzsStatus(process.output).value_or(SzsStatus::Error);
	}
	catch (const SpawnError &error)
	{
		result.status = SzsStatus::Error;
		result.transcript = error.what();
	}

	return result;
}

std::vector<ConjectureResult> proveAll(const std::vector<SubProblem> &problems, const ProverSettings &prover,
	const std::filesystem::path &directory)
{
	std::vector<ConjectureResult> results(problems.size());
	const auto batch = std::max<std::size_t>(1, prover.parallelism);

	for (std::size_t first = 0; first < problems.size(); first += batch)
	{
		std::vector<std::future<ConjectureResult>> running;

		for (std::size_t i = first; i < std::min(problems.size(), first + batch); i++)
			running.push_back(std::async(std::launch::async, prove, std::cref(problems[i]), std::cref(prover), std::cref(directory)));

		for (std::size_t i = 0; i < running.size(); i++)
			results[first + i] = running[i].get();
	}

	return results;
}

const char *directionName(Direction direction)
{
	switch (direction)
	{
		case Direction::Forward:
			return "forward";
		case Direction::Backward:
			return "backward";
		case Direction::Universal:
			return "universal";
	}

	return "forward";
}

void report(const std::vector<SubProblem> &problems, const std::vector<ConjectureResult> &results, std::ostream &log)
{
	for (std::size_t i = 0; i < problems.size(); i++)
	{
		log << "> Proving " << problems[i].name << "...\n";
		log << "Axioms:\n";
		for (const auto &axiom : problems[i].axioms)
			log << "    " << axiom.formula.toString() << "\n";
		log << "\nConjectures:\n";
		log << "    " << problems[i].conjecture.formula.toString() << "\n\n";
		log << "> Proving " << problems[i].name << " ended with a SZS status\n";
		log << "Status: " << toString(results[i].status) << " (" << results[i].elapsed.count() << " ms)\n\n";
	}
}

std::vector<SubProblem> subProblems(const std::string &prefix, const std::vector<NamedFormula> &axioms,
	const std::vector<NamedFormula> &conjectures)
{
	std::vector<SubProblem> result;

	for (std::size_t i = 0; i < conjectures.size(); i++)
		result.push_back(SubProblem{prefix + "_" + std::to_string(i), axioms, conjectures[i]});

	return result;
}

}

VerifyOutcome runVerify(const Program &program, const VerifyTarget &target, Direction direction, const VerifyConfig &config,
	const ProverSettings &prover, std::ostream &log)
{
	if (prover.timeLimit.count() <= 0)
		throw Error("prover time limit must be positive");

	const auto start = std::chrono::steady_clock::now();

	auto directory = prover.workDirectory;
	if (directory.empty())
		directory = std::filesystem::temp_directory_path() / ("ocomp-" + std::to_string(getpid()));
	std::filesystem::create_directories(directory);

	const auto theory = programTheory(program, config).formulas();
	const auto sentences = targetSentences(target, config);

	VerifyOutcome outcome;
	std::ostringstream transcript;

	const auto run = [&](const std::string &prefix, const std::vector<NamedFormula> &axioms, const std::vector<NamedFormula> &conjectures)
	{
		const auto problems = subProblems(prefix, axioms, conjectures);
		auto results = proveAll(problems, prover, directory);
		report(problems, results, transcript);
		return results;
	};

	if (direction != Direction::Backward)
		outcome.forward = run("forward", theory, sentences);

	if (direction != Direction::Forward)
		outcome.backward = run("backward", sentences, theory);

	outcome.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

	if (outcome.success())
		transcript << "> Success! Found a proof of the " << directionName(direction) << " theorem. (" << outcome.elapsed.count() << " ms)\n";
	else
	{
		transcript << "> Failure! Could not prove the " << directionName(direction) << " theorem. (" << outcome.elapsed.count() << " ms)\n";

		if (direction != Direction::Forward)
			transcript << "> Note: the order predicates are free symbols here, not second-order quantified,"
				" so a failed backward proof does not refute the specification.\n";
	}

	outcome.transcriptPath = directory / "transcript.txt";
	std::ofstream{outcome.transcriptPath} << transcript.str();

	for (const auto &results : {outcome.forward, outcome.backward})
		for (const auto &result : results)
			if (result.status == SzsStatus::Error && !result.transcript.empty())
				std::ofstream{directory / (result.name + ".out")} << result.transcript;

	log << transcript.str();
	return outcome;
}

}
