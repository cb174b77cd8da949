#include <catch_amalgamated.hpp>

#include <ocomp/verify.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/stat.h>
#include <unistd.h>

using namespace ocomp;

namespace
{

std::filesystem::path scratch(const std::string &name)
{
	const auto directory = std::filesystem::temp_directory_path() / ("ocomp-test-" + std::to_string(getpid())) / name;
	std::filesystem::remove_all(directory);
	std::filesystem::create_directories(directory);
	return directory;
}

// a stand-in prover that answers Theorem unless the problem mentions the marker
std::filesystem::path fakeProver(const std::filesystem::path &directory, const std::string &marker, const std::string &otherwise)
{
	const auto path = directory / "prover.sh";
	std::ofstream{path}
		<< "#!/bin/sh\n"
		<< "for last; do :; done\n"
		<< "if grep -q '" << marker << "' \"$last\"; then echo '% SZS status " << otherwise << " for problem'; "
		<< "else echo '% SZS status Theorem for problem'; fi\n";
	std::filesystem::permissions(path, std::filesystem::perms::owner_all);
	return path;
}

ProverSettings settings(const std::filesystem::path &prover, const std::filesystem::path &workDirectory)
{
	ProverSettings result;
	result.executable = prover.string();
	result.arguments = {"{file}"};
	result.timeLimit = std::chrono::seconds{10};
	result.workDirectory = workDirectory;
	return result;
}

std::string readFile(const std::filesystem::path &path)
{
	std::ifstream file{path};
	std::ostringstream buffer;
	buffer << file.rdbuf();
	return buffer.str();
}

}

TEST_CASE("SZS status lines", "[verify]")
{
	CHECK(parseSzsStatus("% SZS status Theorem for tight") == SzsStatus::Theorem);
	CHECK(parseSzsStatus("% SZS status Unsatisfiable for x") == SzsStatus::Theorem);
	CHECK(parseSzsStatus("% SZS status CounterSatisfiable for x") == SzsStatus::CounterSatisfiable);
	CHECK(parseSzsStatus("% SZS status Satisfiable for x") == SzsStatus::CounterSatisfiable);
	CHECK(parseSzsStatus("% SZS status Timeout for x") == SzsStatus::Timeout);
	CHECK(parseSzsStatus("% SZS status GaveUp for x") == SzsStatus::GaveUp);
	CHECK(parseSzsStatus("% SZS status Theorem for x\n% SZS status Timeout for x\n") == SzsStatus::Timeout);
	CHECK_FALSE(parseSzsStatus("no status here").has_value());
	CHECK(std::string{toString(SzsStatus::CounterSatisfiable)} == "CounterSatisfiable");
}

TEST_CASE("prover settings from the environment", "[verify]")
{
	unsetenv("OCOMP_PROVER");
	unsetenv("OCOMP_PROVER_ARGS");
	CHECK_FALSE(ProverSettings::fromEnvironment().has_value());

	setenv("OCOMP_PROVER", "/usr/bin/vampire", 1);
	auto defaults = ProverSettings::fromEnvironment();
	REQUIRE(defaults.has_value());
	CHECK(defaults->executable == "/usr/bin/vampire");
	CHECK(defaults->arguments.back() == "{file}");

	setenv("OCOMP_PROVER_ARGS", "--mode casc -t {timeout}", 1);
	auto custom = ProverSettings::fromEnvironment();
	REQUIRE(custom.has_value());
	CHECK(custom->arguments == std::vector<std::string>{"--mode", "casc", "-t", "{timeout}", "{file}"});

	unsetenv("OCOMP_PROVER");
	unsetenv("OCOMP_PROVER_ARGS");
}

TEST_CASE("subprocesses", "[verify]")
{
	const auto echo = runProcess({"/bin/sh", "-c", "echo hello; echo oops 1>&2; exit 3"}, std::chrono::seconds{5});
	CHECK(echo.exitCode == 3);
	CHECK_FALSE(echo.timedOut);
	CHECK(echo.output.find("hello") != std::string::npos);

	const auto slow = runProcess({"/bin/sh", "-c", "sleep 30"}, std::chrono::milliseconds{300});
	CHECK(slow.timedOut);
	CHECK(slow.elapsed < std::chrono::seconds{10});

	CHECK_THROWS_AS(runProcess({}, std::chrono::seconds{1}), SpawnError);
	CHECK_THROWS(runProcess({"/nonexistent/prover"}, std::chrono::seconds{1}));
}

TEST_CASE("forward verification with a stand-in prover", "[verify]")
{
	const auto directory = scratch("forward");
	const auto prover = fakeProver(directory, "impossible_marker", "CounterSatisfiable");

	const auto program = parseProgram("p(X) :- q(X).\np(X) :- not r(X).\nr(1).\nq(1).");
	const auto target = parseSpec("forall X p(X).\nq(1).");

	std::ostringstream log;
	const auto outcome = runVerify(program, target, Direction::Forward, VerifyConfig{}, settings(prover, directory / "work"), log);

	REQUIRE(outcome.forward.size() == 2);
	CHECK(outcome.backward.empty());
	CHECK(outcome.forward[0].name == "forward_0");
	CHECK(outcome.forward[1].name == "forward_1");
	CHECK(outcome.success());

	for (const auto &result : outcome.forward)
	{
		CHECK(result.status == SzsStatus::Theorem);
		CHECK(std::filesystem::exists(result.problemFile));
	}

	const auto transcript = readFile(outcome.transcriptPath);
	CHECK(transcript.find("> Proving forward_0...") != std::string::npos);
	CHECK(transcript.find("Axioms:") != std::string::npos);
	CHECK(transcript.find("Conjectures:") != std::string::npos);
	CHECK(transcript.find("    forall X p(X)") != std::string::npos);
	CHECK(transcript.find("Status: Theorem") != std::string::npos);
	CHECK(transcript.find("> Success! Found a proof of the forward theorem.") != std::string::npos);
	CHECK(log.str() == transcript);
}

TEST_CASE("a failed sub-problem fails the verification", "[verify]")
{
	const auto directory = scratch("failure");
	// only the forward problem has p(a) as its conjecture
	const auto prover = fakeProver(directory, "conjecture, p(c__a)", "CounterSatisfiable");

	const auto program = parseProgram("p(a).");
	const auto target = parseSpec("p(a).");

	std::ostringstream log;
	const auto outcome = runVerify(program, target, Direction::Universal, VerifyConfig{}, settings(prover, directory / "work"), log);

	REQUIRE(outcome.forward.size() == 1);
	CHECK(outcome.forward[0].status == SzsStatus::CounterSatisfiable);
	CHECK_FALSE(outcome.backward.empty());
	CHECK_FALSE(outcome.success());
	CHECK(log.str().find("> Failure!") != std::string::npos);
	CHECK(log.str().find("does not refute") != std::string::npos);
}

TEST_CASE("parallel dispatch keeps sub-problem order", "[verify]")
{
	const auto directory = scratch("parallel");
	const auto prover = fakeProver(directory, "impossible_marker", "Timeout");

	auto prover_settings = settings(prover, directory / "work");
	prover_settings.parallelism = 3;

	const auto target = parseSpec("p(1).\np(2).\np(3).\np(4).\np(5).");
	std::ostringstream log;
	const auto outcome = runVerify(parseProgram("p(1..5)."), target, Direction::Forward, VerifyConfig{}, prover_settings, log);

	REQUIRE(outcome.forward.size() == 5);
	for (std::size_t i = 0; i < outcome.forward.size(); i++)
	{
		CHECK(outcome.forward[i].name == "forward_" + std::to_string(i));
		CHECK(outcome.forward[i].conjecture == "p(" + std::to_string(i + 1) + ")");
	}
	CHECK(outcome.success());
}

TEST_CASE("the backward direction swaps axioms and conjectures", "[verify]")
{
	const auto directory = scratch("backward");
	const auto prover = fakeProver(directory, "impossible_marker", "Timeout");

	std::ostringstream log;
	const auto outcome = runVerify(parseProgram("p.\nq."), parseSpec("p and q."), Direction::Backward, VerifyConfig{},
		settings(prover, directory / "work"), log);

	CHECK(outcome.forward.empty());
	REQUIRE_FALSE(outcome.backward.empty());
	CHECK(outcome.backward[0].name == "backward_0");

	const auto problem = readFile(outcome.backward[0].problemFile);
	CHECK(problem.find("axiom, (p & q)") != std::string::npos);
}

TEST_CASE("a missing prover is reported as an error status", "[verify]")
{
	const auto directory = scratch("missing");

	std::ostringstream log;
	const auto outcome = runVerify(parseProgram("p."), parseSpec("p."), Direction::Forward, VerifyConfig{},
		settings(directory / "no-such-prover", directory / "work"), log);

	REQUIRE(outcome.forward.size() == 1);
	CHECK(outcome.forward[0].status == SzsStatus::Error);
	CHECK_FALSE(outcome.success());
}
