package org.apache.hadoop.hdfs.tools.offlineEditsViewer;

import java.io.IOException;
import java.io.OutputStream;

/**
 * An XmlEditsVisitor walks over an EditLog structure and writes out
 * an equivalent XML document that contains the EditLog's components.
 */
public class XmlEditsVisitor implements OfflineEditsVisitor {
  private final OutputStream out;

  /**
   * Create a processor that writes to the file named and may or may not
   * also output to the screen, as specified.
   *
   * @param Name of file to write output to
   * @param Mirror output to screen?
   */
  public XmlEditsVisitor(OutputStream out)
      throws IOException {
    this.out = out;
  }

  /**
   * Start visitor (initialization)
   */
  @Override
  public void start(int version) throws IOException {
  }
}
