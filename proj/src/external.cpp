// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <thread>

#include "lfs/interpolate.hpp"
#include "lfs/io.hpp"

namespace lfs {

namespace {

std::filesystem::path scratch_base(const InterpolatorSpec& spec) {
    if (!spec.scratch_dir.empty())
        return spec.scratch_dir;
    if (const char* env = std::getenv("LFS_TMP"))
        return env;
    return std::filesystem::temp_directory_path();
}

std::string substitute(std::string s, const std::string& key,
                       const std::string& value) {
    std::size_t pos = 0;
    while ((pos = s.find(key, pos)) != std::string::npos) {
        s.replace(pos, key.size(), value);
        pos += value.size();
    }
    return s;
}

std::string log_tail(const std::filesystem::path& log, std::size_t max_bytes = 512) {
    std::ifstream in(log, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    if (s.size() > max_bytes)
        s = "..." + s.substr(s.size() - max_bytes);
    return s;
}

// Runs the command under /bin/sh with stdout+stderr captured; kills the
// whole process group on timeout. Returns the exit status.
int run_with_timeout(const std::string& command,
                     const std::filesystem::path& log_path,
                     double timeout_seconds, bool& timed_out) {
    timed_out = false;
    const pid_t pid = fork();
    if (pid < 0)
        throw Error("interpolate_external: fork failed");
    if (pid == 0) {
        setpgid(0, 0);
        const int fd = open(log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        if (fd >= 0) {
            dup2(fd, STDOUT_FILENO);
            dup2(fd, STDERR_FILENO);
            close(fd);
        }
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(timeout_seconds);
    int status = 0;
    for (;;) {
        const pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0)
            throw Error("interpolate_external: waitpid failed");
        if (std::chrono::steady_clock::now() >= deadline) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            timed_out = true;
            return -1;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

} // namespace

ViewImage interpolate_external(const SynthesisStep& step,
                               const std::vector<const ViewImage*>& sources,
                               const InterpolatorSpec& spec) {
    spec.validate();
    if (spec.command.find("{out}") == std::string::npos ||
        spec.command.find("{src1}") == std::string::npos)
        throw Error("interpolate_external: command template must use {src1} and {out}");
    if (sources.empty() || sources.size() > 4)
        throw Error("interpolate_external: expected 2 or 4 sources");

    static std::atomic<unsigned> counter{0};
    const auto dir = scratch_base(spec) /
                     ("lfs-ext-" + std::to_string(getpid()) + "-" +
                      std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir);

    std::string cmd = spec.command;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const auto src = dir / ("src" + std::to_string(i + 1) + ".png");
        write_png(src, *sources[i]);
        cmd = substitute(cmd, "{src" + std::to_string(i + 1) + "}", src.string());
    }
    const auto out = dir / "out.png";
    cmd = substitute(cmd, "{tu}", std::to_string(step.target.u));
    cmd = substitute(cmd, "{tv}", std::to_string(step.target.v));
    cmd = substitute(cmd, "{out}", out.string());

    const auto log = dir / "cmd.log";
    bool timed_out = false;
    const int status = run_with_timeout(cmd, log, spec.timeout_seconds, timed_out);

    auto cleanup = [&] { std::filesystem::remove_all(dir); };

    if (timed_out) {
        cleanup();
        throw Error("interpolate_external: command timed out after " +
                    std::to_string(spec.timeout_seconds) + " s");
    }
    if (status != 0) {
        const std::string diag = log_tail(log);
        cleanup();
        throw Error("interpolate_external: command exited with status " +
                    std::to_string(status) + (diag.empty() ? "" : ": " + diag));
    }
    if (!std::filesystem::exists(out)) {
        cleanup();
        throw Error("interpolate_external: command produced no output image");
    }

    ViewImage img = read_png(out);
    if (!img.same_size(*sources[0])) {
        cleanup();
        throw Error("interpolate_external: output size " +
                    std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " does not match sources");
    }
    cleanup();
    return img;
}

} // namespace lfs
