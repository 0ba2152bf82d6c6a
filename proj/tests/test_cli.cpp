#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CASCADE_KIT_CLI) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify --type A --rank 5"), 0);
  EXPECT_EQ(run("verify --type C --rank 3 --all --seed 7 --format text"), 0);
  EXPECT_EQ(run("eval --type A --rank 5 --xi 1,2,3"), 2);
  EXPECT_EQ(run("eval --type A --rank 5 --xi 1,2"), 0);
  EXPECT_EQ(run("gens --type Q --rank 3"), 2);
  EXPECT_EQ(run("cascade --type A --order 'prefix:1,3;tail:increasing' --steps 2"), 0);
  EXPECT_EQ(run("cascade --type A --rank 6"), 0);
  EXPECT_EQ(run("gens --type A --rank 4 --which delta:2"), 0);
  EXPECT_EQ(run("gens --type A --rank 4 --which delta:9"), 2);
  EXPECT_EQ(run("oracle --type D --rank 4 --all"), 0);
  EXPECT_EQ(run("center-brute --type A --rank 3 --budget-degree 3"), 0);
  EXPECT_EQ(run("gens --type D --rank 5 --which d:3 --reading literal --all"), 1);
  EXPECT_EQ(run("gens --type D --rank 5 --which d:3 --all"), 0);
  EXPECT_EQ(run("--bogus"), 2);
}
