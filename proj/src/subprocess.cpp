#include "hlsbench/subprocess.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "hlsbench/errors.hpp"

namespace hlsbench {

namespace {

// Communicates exec failure from child to parent over a CLOEXEC pipe.
struct Pipe {
  int rd = -1;
  int wr = -1;
  Pipe() {
    int fds[2];
    if (pipe(fds) != 0) throw Error(Errc::IoError, "pipe() failed");
    rd = fds[0];
    wr = fds[1];
    fcntl(wr, F_SETFD, FD_CLOEXEC);
  }
  ~Pipe() {
    if (rd >= 0) close(rd);
    if (wr >= 0) close(wr);
  }
};

}  // namespace

SubprocessResult run_subprocess(const SubprocessSpec& spec) {
  SubprocessResult result;
  if (spec.argv.empty()) throw Error(Errc::IoError, "empty argv");

  Pipe err_pipe;

  // Materialize stdin before forking.
  int stdin_fd = -1;
  std::filesystem::path stdin_tmp;
  if (spec.stdin_data) {
    char tmpl[] = "/tmp/hlsbench-stdin-XXXXXX";
    stdin_fd = mkstemp(tmpl);
    if (stdin_fd < 0) throw Error(Errc::IoError, "mkstemp failed");
    stdin_tmp = tmpl;
    const std::string& data = *spec.stdin_data;
    ssize_t off = 0;
    while (off < static_cast<ssize_t>(data.size())) {
      ssize_t n = write(stdin_fd, data.data() + off, data.size() - off);
      if (n < 0) throw Error(Errc::IoError, "write to stdin temp failed");
      off += n;
    }
    lseek(stdin_fd, 0, SEEK_SET);
  }

  auto t0 = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    if (stdin_fd >= 0) close(stdin_fd);
    throw Error(Errc::IoError, "fork() failed");
  }

  if (pid == 0) {
    // child
    setpgid(0, 0);
    if (stdin_fd >= 0) {
      dup2(stdin_fd, STDIN_FILENO);
    } else {
      int devnull = open("/dev/null", O_RDONLY);
      if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    }
    if (!spec.stdout_path.empty()) {
      int out = open(spec.stdout_path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
      if (out >= 0) {
        dup2(out, STDOUT_FILENO);
        dup2(out, STDERR_FILENO);
      }
    }
    if (!spec.cwd.empty()) {
      if (chdir(spec.cwd.c_str()) != 0) {
        const char* msg = "chdir failed";
        (void)!write(err_pipe.wr, msg, strlen(msg));
        _exit(127);
      }
    }
    for (const auto& [k, v] : spec.env) setenv(k.c_str(), v.c_str(), 1);

    std::vector<char*> argv;
    argv.reserve(spec.argv.size() + 1);
    for (const auto& a : spec.argv) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execvp(argv[0], argv.data());
    std::string msg = std::string("exec failed: ") + strerror(errno);
    (void)!write(err_pipe.wr, msg.data(), msg.size());
    _exit(127);
  }

  // parent
  close(err_pipe.wr);
  err_pipe.wr = -1;
  if (stdin_fd >= 0) close(stdin_fd);

  const auto deadline =
      spec.timeout_s > 0
          ? t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(spec.timeout_s))
          : std::chrono::steady_clock::time_point::max();

  int status = 0;
  bool reaped = false;
  while (!reaped) {
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      reaped = true;
      break;
    }
    if (r < 0) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      reaped = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }

  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Drain the exec-error pipe; any bytes mean the child never exec'd.
  char buf[256];
  ssize_t n = read(err_pipe.rd, buf, sizeof(buf) - 1);
  if (n > 0) {
    buf[n] = '\0';
    result.spawn_failed = true;
    result.spawn_error = buf;
  }

  if (!spec.stdin_data) {
    // nothing to clean up
  } else {
    std::error_code ec;
    std::filesystem::remove(stdin_tmp, ec);
  }

  if (!result.timed_out && !result.spawn_failed && reaped) {
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -WTERMSIG(status);
  }
  return result;
}

}  // namespace hlsbench
