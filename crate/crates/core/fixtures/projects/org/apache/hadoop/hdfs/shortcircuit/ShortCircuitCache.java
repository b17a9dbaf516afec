package org.apache.hadoop.hdfs.shortcircuit;

import java.io.Closeable;
import java.util.concurrent.ScheduledThreadPoolExecutor;
import java.util.concurrent.locks.ReentrantLock;

/**
 * The ShortCircuitCache tracks things which the client needs to access
 * HDFS block files via short-circuit.
 */
public class ShortCircuitCache implements Closeable {

  /**
   * The executor service that runs the cacheCleaner.
   */
  private final ScheduledThreadPoolExecutor cleanerExecutor
      = new ScheduledThreadPoolExecutor(1);

  /**
   * The executor service that runs the cacheCleaner.
   */
  private final ScheduledThreadPoolExecutor releaserExecutor
      = new ScheduledThreadPoolExecutor(1);

  /**
   * A lock which protects the caches.
   */
  private final ReentrantLock lock = new ReentrantLock();

  /**
   * Maximum total size of the cache, including both mmapped and
   * non-mmapped elements.
   */
  private final int maxTotalSize;

  public ShortCircuitCache(int maxTotalSize) {
    this.maxTotalSize = maxTotalSize;
  }

  @Override
  public void close() {
    cleanerExecutor.shutdown();
    releaserExecutor.shutdown();
  }
}
