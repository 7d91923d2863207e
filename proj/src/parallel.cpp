#include "cwf/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

#include "cwf/kernels.hpp"

namespace cwf::par {
namespace {

class Pool {
 public:
  ~Pool() { shutdown(); }

  int threads() const { return nthreads_; }

  void resize(int n) {
    if (n < 1) n = 1;
    if (n == nthreads_) return;
    shutdown();
    nthreads_ = n;
    stop_ = false;
    for (int i = 0; i < nthreads_ - 1; ++i)
      workers_.emplace_back([this] { worker(); });
  }

  void run(std::size_t nblocks, const std::function<void(std::size_t)>& fn) {
    if (nblocks == 0) return;
    if (nthreads_ <= 1 || nblocks == 1 || workers_.empty()) {
      for (std::size_t b = 0; b < nblocks; ++b) fn(b);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(m_);
      job_ = &fn;
      total_ = nblocks;
      next_.store(0, std::memory_order_relaxed);
      pending_.store(nblocks, std::memory_order_relaxed);
      ++gen_;
    }
    cv_.notify_all();
    drain(fn, total_);
    std::unique_lock<std::mutex> lk(m_);
    cv_done_.wait(lk, [this] { return pending_.load() == 0; });
    job_ = nullptr;
    total_ = 0;
  }

 private:
  void drain(const std::function<void(std::size_t)>& fn, std::size_t total) {
    for (;;) {
      const std::size_t b = next_.fetch_add(1, std::memory_order_relaxed);
      if (b >= total) break;
      fn(b);
      finish_one();
    }
  }

  void finish_one() {
    if (pending_.fetch_sub(1) == 1) {
      std::lock_guard<std::mutex> lk(m_);
      cv_done_.notify_all();
    }
  }

  void worker() {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(std::size_t)>* fn = nullptr;
      std::size_t total = 0;
      {
        std::unique_lock<std::mutex> lk(m_);
        cv_.wait(lk, [&] { return stop_ || gen_ != seen; });
        if (stop_) return;
        seen = gen_;
        fn = job_;
        total = total_;
      }
      if (fn) {
        for (;;) {
          const std::size_t b = next_.fetch_add(1, std::memory_order_relaxed);
          if (b >= total) break;
          (*fn)(b);
          finish_one();
        }
      }
    }
  }

  void shutdown() {
    {
      std::lock_guard<std::mutex> lk(m_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
    workers_.clear();
  }

  int nthreads_ = 1;
  bool stop_ = false;
  std::uint64_t gen_ = 0;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t total_ = 0;
  std::atomic<std::size_t> next_{0};
  std::atomic<std::size_t> pending_{0};
  std::mutex m_;
  std::condition_variable cv_;
  std::condition_variable cv_done_;
  std::vector<std::thread> workers_;
};

Pool& pool() {
  static Pool p;
  return p;
}

std::size_t nblocks_of(std::size_t n) { return (n + kBlock - 1) / kBlock; }

double tree_sum(const double* p, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return p[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum(p, lo, mid) + tree_sum(p, mid, hi);
}

}  // namespace

int thread_count() { return pool().threads(); }

void set_thread_count(int n) { pool().resize(n); }

void parallel_for(std::size_t nblocks, const std::function<void(std::size_t)>& fn) {
  pool().run(nblocks, fn);
}

void parallel_for_range(std::size_t n,
                        const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nb = nblocks_of(n);
  pool().run(nb, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    fn(lo, std::min(lo + kBlock, n));
  });
}

double det_sum(const double* x, std::size_t n) {
  if (n == 0) return 0.0;
  const std::size_t nb = nblocks_of(n);
  std::vector<double> partial(nb);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    partial[b] = kern::block_sum(x + lo, std::min(kBlock, n - lo));
  });
  return tree_sum(partial.data(), 0, nb);
}

cplx det_sum_cplx(const cplx* x, std::size_t n) {
  if (n == 0) return {0.0, 0.0};
  const double* d = reinterpret_cast<const double*>(x);
  const std::size_t nd = 2 * n;
  const std::size_t nb = nblocks_of(nd);
  std::vector<double> re(nb), im(nb);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    double out[2];
    kern::block_sum2(d + lo, std::min(kBlock, nd - lo), out);
    re[b] = out[0];
    im[b] = out[1];
  });
  return {tree_sum(re.data(), 0, nb), tree_sum(im.data(), 0, nb)};
}

double det_dot(const double* x, const double* y, std::size_t n) {
  if (n == 0) return 0.0;
  const std::size_t nb = nblocks_of(n);
  std::vector<double> partial(nb);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    partial[b] = kern::block_dot(x + lo, y + lo, std::min(kBlock, n - lo));
  });
  return tree_sum(partial.data(), 0, nb);
}

void par_axpy(double a, const double* x, double* y, std::size_t n) {
  parallel_for_range(
      n, [&](std::size_t lo, std::size_t hi) { kern::axpy(a, x + lo, y + lo, hi - lo); });
}

void par_axpby(double a, const double* x, double b, double* y, std::size_t n) {
  parallel_for_range(n, [&](std::size_t lo, std::size_t hi) {
    kern::axpby(a, x + lo, b, y + lo, hi - lo);
  });
}

void par_scale(double a, const double* x, double* y, std::size_t n) {
  parallel_for_range(
      n, [&](std::size_t lo, std::size_t hi) { kern::scale(a, x + lo, y + lo, hi - lo); });
}

void par_cmm(int k, double coeff, const cplx* A, const cplx* B, cplx* C,
             std::size_t nsites, bool accumulate) {
  const std::size_t kk = static_cast<std::size_t>(k) * k;
  parallel_for_range(nsites, [&](std::size_t lo, std::size_t hi) {
    kern::cmm(k, coeff, A + lo * kk, B + lo * kk, C + lo * kk, hi - lo, accumulate);
  });
}

void par_retrace_mul(int k, const cplx* A, const cplx* B, double* t,
                     std::size_t nsites) {
  const std::size_t kk = static_cast<std::size_t>(k) * k;
  parallel_for_range(nsites, [&](std::size_t lo, std::size_t hi) {
    kern::retrace_mul(k, A + lo * kk, B + lo * kk, t + lo, hi - lo);
  });
}

}  // namespace cwf::par
